"""
evaluate - forward-chaining evaluation of one model on a CSV series.
"""

import argparse

from ppfd.app.commands.common import (
    add_model_arguments,
    add_series_arguments,
    build_config,
    default_output,
)
from ppfd.app.core.config import Settings
from ppfd.application.use_cases.compare import COMPARE_COLUMNS, comparison_row
from ppfd.application.use_cases.evaluation import RunExperimentInput
from ppfd.infrastructure.container import get_run_experiment_use_case, get_table_writer


def register(subparsers, settings: Settings) -> None:
    parser = subparsers.add_parser("evaluate", help="cross-validate a model and write a JSON report")
    add_series_arguments(parser)
    add_model_arguments(parser, settings)
    parser.add_argument("--folds", type=int, default=5)
    parser.add_argument("--alpha", type=float, default=0.2, help="weight of over-predictions")
    parser.add_argument("--workers", type=int, default=settings.workers)
    parser.add_argument("--out", default=None, help="report path (default: <output_dir>/<model>-report.json)")
    parser.add_argument(
        "--plot-data",
        default=None,
        metavar="CSV",
        help="write index,actual,forecast,is_peak for the final fold",
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    config = build_config(args, folds=args.folds, alpha=args.alpha, workers=args.workers)
    output = get_run_experiment_use_case().execute(
        RunExperimentInput(
            input_path=args.input,
            config=config,
            out_path=default_output(settings, args.out, f"{config.model.value}-report.json"),
            step=args.step,
            interpolate=args.interpolate,
            truncate_after=args.truncate_after,
            plot_data_path=args.plot_data,
        )
    )
    table = get_table_writer().render(COMPARE_COLUMNS, [comparison_row(output.result)])
    print(table, end="")
    print(f"report: {output.report_path}")
    if output.plot_data_path:
        print(f"plot data: {output.plot_data_path}")
    return 0
