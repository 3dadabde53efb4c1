"""
Shared argument parsing for the subcommands.
"""

import argparse
from datetime import datetime, timedelta
from typing import Optional, Tuple

import pandas as pd

from ppfd.app.core.config import Settings
from ppfd.domain.entities.evaluation import (
    AnnConfig,
    ArimaConfig,
    ExperimentConfig,
    ModelKind,
)
from ppfd.domain.entities.synth import SeasonalComponent
from ppfd.domain.exceptions import ValidationError

DEFAULT_C = 3


def parse_step(text: str) -> timedelta:
    """'1D', '24h', '15min', '3600s' and other pandas offsets."""
    try:
        step = pd.Timedelta(text).to_pytimedelta()
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid step {text!r}") from exc
    if step <= timedelta(0):
        raise argparse.ArgumentTypeError(f"step must be positive, got {text!r}")
    return step


def parse_instant(text: str) -> datetime:
    """ISO-8601 instant; offsets are converted to naive UTC like the CSV reader does."""
    try:
        stamp = pd.Timestamp(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid instant {text!r}") from exc
    if stamp.tzinfo is not None:
        stamp = stamp.tz_convert("UTC").tz_localize(None)
    return stamp.to_pydatetime()


def parse_order(text: str) -> Tuple[int, int]:
    try:
        p, q = (int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected p,q, got {text!r}") from exc
    return p, q


def parse_component(text: str) -> SeasonalComponent:
    try:
        return SeasonalComponent.parse(text)
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def add_series_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, help="CSV with header timestamp,value")
    parser.add_argument(
        "--step",
        type=parse_step,
        default=None,
        help="sampling interval, e.g. 1D or 1h (required for integer timestamps)",
    )
    parser.add_argument(
        "--interpolate",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="fill interior gaps linearly (default: on)",
    )
    parser.add_argument(
        "--truncate-after",
        type=parse_instant,
        default=None,
        metavar="INSTANT",
        help="drop samples after this ISO-8601 instant",
    )


def add_model_arguments(parser: argparse.ArgumentParser, settings: Settings) -> None:
    parser.add_argument(
        "--model",
        choices=[kind.value for kind in ModelKind],
        default=ModelKind.PPFD_ANN.value,
    )
    parser.add_argument(
        "-c",
        type=int,
        default=DEFAULT_C,
        help="seasonal components for PPFD models (default: %(default)s)",
    )
    parser.add_argument(
        "--window",
        type=int,
        default=None,
        help="ANN input window (default: 24 for steps up to 1h, else 7)",
    )
    parser.add_argument(
        "--detrend",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="rank PPFD seasonal bins on the linearly detrended series (default: on)",
    )
    parser.add_argument("--seed", type=int, default=settings.default_seed)
    parser.add_argument("--epochs", type=int, default=AnnConfig.epochs)
    parser.add_argument("--learning-rate", type=float, default=AnnConfig.learning_rate)
    parser.add_argument("--p-max", type=int, default=ArimaConfig.p_max)
    parser.add_argument("--q-max", type=int, default=ArimaConfig.q_max)
    parser.add_argument(
        "--arima-order",
        type=parse_order,
        default=None,
        metavar="P,Q",
        help="fixed ARIMA order instead of the AIC grid search",
    )


def build_config(args: argparse.Namespace, **overrides) -> ExperimentConfig:
    kind = ModelKind(args.model)
    fields = dict(
        model=kind,
        c=args.c if kind.is_ppfd else None,
        window=args.window,
        detrend=args.detrend,
        seed=args.seed,
        ann=AnnConfig(learning_rate=args.learning_rate, epochs=args.epochs, seed=args.seed),
        arima=ArimaConfig(p_max=args.p_max, q_max=args.q_max, order=args.arima_order),
    )
    fields.update(overrides)
    return ExperimentConfig(**fields)


def default_output(settings: Settings, explicit: Optional[str], name: str) -> str:
    return explicit if explicit else settings.output_path(name)
