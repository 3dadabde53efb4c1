"""
spectrum - dump bin, frequency, amplitude, phase of a series.
"""

import argparse

from ppfd.app.commands.common import add_series_arguments, default_output
from ppfd.app.core.config import Settings
from ppfd.application.use_cases.modeling import SpectrumInput
from ppfd.infrastructure.container import get_spectrum_use_case


def register(subparsers, settings: Settings) -> None:
    parser = subparsers.add_parser("spectrum", help="write the one-sided amplitude spectrum as CSV")
    add_series_arguments(parser)
    parser.add_argument("-c", type=int, default=None, help="list (and optionally remove) the top-c sinusoids")
    parser.add_argument(
        "--remove-top",
        action="store_true",
        help="dump the spectrum with the top-c components zeroed",
    )
    parser.add_argument("--out", default=None, help="CSV path (default: <output_dir>/spectrum.csv)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    output = get_spectrum_use_case().execute(
        SpectrumInput(
            input_path=args.input,
            out_path=default_output(settings, args.out, "spectrum.csv"),
            c=args.c,
            remove_top=args.remove_top,
            step=args.step,
            interpolate=args.interpolate,
            truncate_after=args.truncate_after,
        )
    )
    print(f"wrote {output.n // 2 + 1} bins to {output.path}")
    for s in output.top:
        print(f"bin {s.bin:>6}  period {s.period:>10.3f}  amplitude {s.amplitude:.6g}  phase {s.phase:+.4f}")
    return 0
