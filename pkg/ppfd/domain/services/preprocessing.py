"""
Preprocessing Service - Grid normalisation, gap filling and truncation.

Ingestion maps timestamps onto integer grid positions once; later stages only
see indices.
"""

from datetime import datetime, timedelta
from typing import Sequence, Tuple

import numpy as np
from loguru import logger

from ppfd.domain.entities.evaluation import SeriesSummary
from ppfd.domain.entities.series import GapReport, TimeSeries
from ppfd.domain.exceptions import (
    EmptySeriesError,
    GapError,
    SeriesGridError,
    ValidationError,
)


def from_samples(
    timestamps: Sequence[datetime],
    values: Sequence[float],
    step: timedelta,
) -> Tuple[TimeSeries, GapReport]:
    """
    Place samples on the grid origin + k * step.

    Args:
        timestamps: Strictly increasing sample instants
        values: Observed value per timestamp
        step: Sampling interval

    Returns:
        The series (missing slots hold NaN placeholders) and its gap report

    Raises:
        SeriesGridError: Off-grid, duplicate or decreasing timestamp
    """
    if len(timestamps) != len(values):
        raise ValidationError("values", "timestamps and values differ in length")
    if not timestamps:
        raise EmptySeriesError("no samples to ingest")
    if step <= timedelta(0):
        raise ValidationError("step", f"must be positive, got {step}")

    origin = timestamps[0]
    positions = []
    previous = None
    for ts in timestamps:
        if previous is not None:
            if ts == previous:
                raise SeriesGridError(ts, "duplicate timestamp")
            if ts < previous:
                raise SeriesGridError(ts, "timestamps must be strictly increasing")
        offset = ts - origin
        if offset % step != timedelta(0):
            raise SeriesGridError(ts, "off-grid timestamp")
        positions.append(offset // step)
        previous = ts

    length = positions[-1] + 1
    grid = np.full(length, np.nan)
    grid[positions] = np.asarray(values, dtype=np.float64)
    missing = np.ones(length, dtype=bool)
    missing[positions] = False

    gaps = GapReport.from_mask(missing)
    if not gaps.is_empty:
        logger.info(
            "Ingested {} samples onto a grid of {} ({} missing in {} gaps)",
            len(timestamps),
            length,
            gaps.missing_count,
            len(gaps),
        )
    series = TimeSeries(values=grid, origin=origin, step=step, _missing=missing)
    return series, gaps


def linear_interpolate(series: TimeSeries, gaps: GapReport) -> TimeSeries:
    """
    Fill interior gaps on the straight line between the flanking known values.

    Raises:
        GapError: A gap touches either end of the series
    """
    if gaps.is_empty:
        return series

    n = len(series)
    missing = np.zeros(n, dtype=bool)
    for start, length in gaps.gaps:
        if start == 0 or start + length >= n:
            raise GapError(
                f"gap at index {start} (length {length}) has no known value on "
                "both sides; leading/trailing gaps are not extrapolated"
            )
        missing[start : start + length] = True

    index = np.arange(n)
    known = ~missing
    values = np.array(series.values)
    values[missing] = np.interp(index[missing], index[known], values[known])
    return TimeSeries(values=values, origin=series.origin, step=series.step)


def truncate_after(series: TimeSeries, cutoff: datetime) -> TimeSeries:
    """Keep the prefix of samples whose timestamp is <= cutoff."""
    if cutoff < series.origin:
        raise EmptySeriesError(
            f"cutoff {cutoff.isoformat()} precedes series origin "
            f"{series.origin.isoformat()}; nothing would remain"
        )
    keep = min((cutoff - series.origin) // series.step + 1, len(series))
    if keep == len(series):
        return series
    logger.info("Truncating series after {}: {} -> {} samples", cutoff, len(series), keep)
    return series.slice(0, keep)


def describe(series: TimeSeries) -> SeriesSummary:
    values = series.require_complete().values
    return SeriesSummary(
        n=len(values),
        mean=float(np.mean(values)),
        min=float(np.min(values)),
        median=float(np.median(values)),
        max=float(np.max(values)),
    )
