"""
synth - write the noise-free synthetic series as CSV.
"""

import argparse
from datetime import timedelta

from ppfd.app.commands.common import default_output, parse_component, parse_instant, parse_step
from ppfd.app.core.config import Settings
from ppfd.application.use_cases.synth import GenerateSyntheticInput
from ppfd.domain.entities.synth import DEFAULT_COMPONENTS, SynthSpec
from ppfd.infrastructure.container import get_generate_synthetic_use_case

SUMMARY_HEADER = "Dataset | N | Mean | Min | Median | Max"


def register(subparsers, settings: Settings) -> None:
    parser = subparsers.add_parser("synth", help="generate the synthetic trend + seasonality series")
    parser.add_argument("--out", default=None, help="CSV path (default: <output_dir>/synthetic.csv)")
    parser.add_argument("--n", type=int, default=SynthSpec.n)
    parser.add_argument("--slope", type=float, default=SynthSpec.slope)
    parser.add_argument("--intercept", type=float, default=SynthSpec.intercept)
    parser.add_argument(
        "--component",
        type=parse_component,
        action="append",
        default=None,
        metavar="PERIOD:AMPLITUDE",
        help="sine seasonality; repeatable, replaces the 7/30/365 defaults",
    )
    parser.add_argument("--origin", type=parse_instant, default=settings.synth_origin)
    parser.add_argument("--step", type=parse_step, default=timedelta(days=1))
    parser.add_argument("--seed", type=int, default=settings.default_seed)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    spec = SynthSpec(
        n=args.n,
        slope=args.slope,
        intercept=args.intercept,
        components=tuple(args.component) if args.component else DEFAULT_COMPONENTS,
        origin=args.origin,
        step=args.step,
    )
    output = get_generate_synthetic_use_case().execute(
        GenerateSyntheticInput(
            out_path=default_output(settings, args.out, "synthetic.csv"),
            spec=spec,
            seed=args.seed,
        )
    )
    print(f"wrote {output.summary.n} rows to {output.path}")
    print(SUMMARY_HEADER)
    print(output.summary.format_row("Synthetic"))
    return 0
