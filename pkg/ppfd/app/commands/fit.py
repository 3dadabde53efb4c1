"""
fit - train a model on a whole series and save it as JSON.
"""

import argparse

from ppfd.app.commands.common import (
    add_model_arguments,
    add_series_arguments,
    build_config,
    default_output,
)
from ppfd.app.core.config import Settings
from ppfd.application.use_cases.modeling import FitModelInput
from ppfd.infrastructure.container import get_fit_model_use_case


def register(subparsers, settings: Settings) -> None:
    parser = subparsers.add_parser("fit", help="train on the full series and save the model")
    add_series_arguments(parser)
    add_model_arguments(parser, settings)
    parser.add_argument("--out", default=None, help="model path (default: <output_dir>/<model>-model.json)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    config = build_config(args)
    output = get_fit_model_use_case().execute(
        FitModelInput(
            input_path=args.input,
            config=config,
            out_path=default_output(settings, args.out, f"{config.model.value}-model.json"),
            step=args.step,
            interpolate=args.interpolate,
            truncate_after=args.truncate_after,
        )
    )
    print(f"model trained on {output.training_length} samples: {output.path}")
    return 0
