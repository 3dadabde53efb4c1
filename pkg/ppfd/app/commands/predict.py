"""
predict - one-step-ahead forecasts from a saved model.
"""

import argparse

from ppfd.app.commands.common import default_output
from ppfd.app.core.config import Settings
from ppfd.application.use_cases.modeling import PredictInput
from ppfd.infrastructure.container import get_predict_use_case


def register(subparsers, settings: Settings) -> None:
    parser = subparsers.add_parser("predict", help="forecast with a model saved by fit")
    parser.add_argument("--model-file", required=True, help="model JSON written by fit")
    parser.add_argument("--input", required=True, help="history CSV on the model's grid")
    parser.add_argument("--interpolate", action=argparse.BooleanOptionalAction, default=True)
    parser.add_argument("--out", default=None, help="forecast CSV (default: <output_dir>/forecast.csv)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    output = get_predict_use_case().execute(
        PredictInput(
            model_path=args.model_file,
            input_path=args.input,
            out_path=default_output(settings, args.out, "forecast.csv"),
            interpolate=args.interpolate,
        )
    )
    last = output.rows[-1]
    print(f"wrote {len(output.rows)} forecasts to {output.path}")
    print(f"next ({last['timestamp']}): {last['forecast']:.6g}")
    return 0
