"""
Series Preparation

Shared front half of every file-driven use case: load, fill gaps, truncate.
"""

from dataclasses import dataclass
from datetime import datetime, timedelta
from typing import Optional

from loguru import logger

from ppfd.application.interfaces.repositories import SeriesRepository
from ppfd.domain.entities.series import GapReport, TimeSeries
from ppfd.domain.services.preprocessing import linear_interpolate, truncate_after


@dataclass
class PrepareSeriesInput:
    """Input DTO for series preparation."""

    path: str
    step: Optional[timedelta] = None
    interpolate: bool = True
    truncate_after: Optional[datetime] = None


@dataclass
class PreparedSeries:
    series: TimeSeries
    gaps: GapReport
    input_sha256: str


def prepare_series(repo: SeriesRepository, input_dto: PrepareSeriesInput) -> PreparedSeries:
    """
    Ingest, then interpolate (unless disabled), then truncate.

    With interpolation disabled a series with gaps is returned as is; any
    later numerical stage rejects it.
    """
    series, gaps = repo.load(input_dto.path, input_dto.step)
    if input_dto.interpolate:
        series = linear_interpolate(series, gaps)
        if not gaps.is_empty:
            logger.info("Interpolated {} missing values", gaps.missing_count)
    if input_dto.truncate_after is not None:
        series = truncate_after(series, input_dto.truncate_after)
    return PreparedSeries(
        series=series, gaps=gaps, input_sha256=repo.sha256(input_dto.path)
    )
