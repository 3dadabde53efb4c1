"""
compare - tabulate several JSON reports.
"""

import argparse
from pathlib import Path

from ppfd.app.core.config import Settings
from ppfd.application.use_cases.compare import CompareReportsInput
from ppfd.infrastructure.container import get_compare_reports_use_case


def register(subparsers, settings: Settings) -> None:
    parser = subparsers.add_parser("compare", help="one table row per evaluation report")
    parser.add_argument("reports", nargs="+", help="report JSON files")
    parser.add_argument("--format", choices=["text", "csv"], default="text")
    parser.add_argument("--out", default=None, help="write the table here instead of stdout")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    output = get_compare_reports_use_case().execute(
        CompareReportsInput(paths=list(args.reports), fmt=args.format)
    )
    if args.out:
        target = Path(args.out)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(output.table, encoding="utf-8")
    else:
        print(output.table, end="")
    return 0
