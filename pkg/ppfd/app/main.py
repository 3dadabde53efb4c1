import argparse
import sys
from typing import List, Optional

from loguru import logger
from pydantic import ValidationError as SettingsError

from ppfd import __version__
from ppfd.app.commands import compare, evaluate, fit, predict, spectrum, synth
from ppfd.app.core.logging import configure_logging
from ppfd.domain.exceptions import DataSourceError, DomainError
from ppfd.infrastructure.container import get_settings

# Exit statuses (sysexits.h)
EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 65
EXIT_IO = 74

LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")

# Include subcommands
COMMANDS = (synth, evaluate, compare, fit, predict, spectrum)


def build_parser(settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ppfd",
        description="Peak prediction via Fourier decomposition: synthesize, evaluate, compare.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        default=settings.log_level,
        help="loguru level (default: %(default)s)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers, settings)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        settings = get_settings()
    except SettingsError as exc:
        print(f"ppfd: invalid PPFD_* settings: {exc}", file=sys.stderr)
        return EXIT_USAGE

    args = build_parser(settings).parse_args(argv)
    configure_logging(args.log_level)

    try:
        return args.handler(args, settings)
    except DataSourceError as exc:
        logger.error("{}", exc)
        return EXIT_IO
    except OSError as exc:
        logger.error("I/O error: {}", exc)
        return EXIT_IO
    except DomainError as exc:
        logger.error("{}", exc)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
