"""
Modeling Use Cases

Fit a model on a whole series and persist it, forecast from a persisted
model, and dump a series' spectrum.
"""

from dataclasses import dataclass, field
from datetime import datetime, timedelta
from typing import List, Optional

import numpy as np
from loguru import logger

from ppfd.application.interfaces.forecasters import FittedModel, ForecasterFactory
from ppfd.application.interfaces.repositories import (
    ModelRepository,
    SeriesRepository,
    TableWriter,
)
from ppfd.application.use_cases.ingest import PrepareSeriesInput, prepare_series
from ppfd.domain.entities.evaluation import ExperimentConfig
from ppfd.domain.entities.spectrum import Sinusoid
from ppfd.domain.exceptions import InsufficientHistoryError, ValidationError
from ppfd.domain.services import spectral

FORECAST_COLUMNS = ("index", "timestamp", "actual", "forecast")
SPECTRUM_COLUMNS = ("bin", "frequency", "amplitude", "phase")


@dataclass
class FitModelInput:
    """Input DTO for fitting and saving a model."""

    input_path: str
    config: ExperimentConfig
    out_path: str
    step: Optional[timedelta] = None
    interpolate: bool = True
    truncate_after: Optional[datetime] = None


@dataclass
class FitModelOutput:
    """Output DTO for fitting and saving a model."""

    path: str
    training_length: int


class FitModelUseCase:
    """Use case for training one model on an entire series."""

    def __init__(
        self,
        series_repo: SeriesRepository,
        model_repo: ModelRepository,
        factory: ForecasterFactory,
    ):
        self.series_repo = series_repo
        self.model_repo = model_repo
        self.factory = factory

    def execute(self, input_dto: FitModelInput) -> FitModelOutput:
        prepared = prepare_series(
            self.series_repo,
            PrepareSeriesInput(
                path=input_dto.input_path,
                step=input_dto.step,
                interpolate=input_dto.interpolate,
                truncate_after=input_dto.truncate_after,
            ),
        )
        series = prepared.series.require_complete(min_length=2)
        config = input_dto.config.for_step(series.step)
        model = self.factory.fit(config.model, series, config, seed=config.seed)
        fitted = FittedModel(
            kind=config.model,
            model=model,
            training_length=len(series),
            origin=series.origin,
            step=series.step,
            config=config,
        )
        path = self.model_repo.save(input_dto.out_path, fitted)
        logger.info("Saved {} model trained on {} samples to {}", config.model.value, len(series), path)
        return FitModelOutput(path=path, training_length=len(series))


@dataclass
class PredictInput:
    """Input DTO for one-step-ahead prediction from a saved model."""

    model_path: str
    input_path: str
    out_path: str
    interpolate: bool = True


@dataclass
class PredictOutput:
    """Output DTO for one-step-ahead prediction from a saved model."""

    path: str
    rows: List[dict] = field(default_factory=list)

    @property
    def next_forecast(self) -> float:
        return self.rows[-1]["forecast"]


class PredictUseCase:
    """
    Use case for forecasting with a saved model.

    Business rules:
    - The history file must sit on the model's grid (same origin and step)
    - Forecasts cover every index after training plus the next unseen one
    - Each forecast consumes observed values only
    """

    def __init__(
        self,
        series_repo: SeriesRepository,
        model_repo: ModelRepository,
        table_writer: TableWriter,
    ):
        self.series_repo = series_repo
        self.model_repo = model_repo
        self.table_writer = table_writer

    def execute(self, input_dto: PredictInput) -> PredictOutput:
        fitted = self.model_repo.load(input_dto.model_path)
        prepared = prepare_series(
            self.series_repo,
            PrepareSeriesInput(
                path=input_dto.input_path,
                step=fitted.step,
                interpolate=input_dto.interpolate,
            ),
        )
        series = prepared.series.require_complete()
        if series.origin != fitted.origin:
            raise ValidationError(
                "origin",
                f"history starts at {series.origin.isoformat()} but the model was "
                f"trained from {fitted.origin.isoformat()}",
            )
        n = len(series)
        if n < fitted.training_length:
            raise InsufficientHistoryError(
                fitted.training_length, n, what="prediction history"
            )

        values = series.values
        forecasts = fitted.model.forecast(values, fitted.training_length, n + 1)
        rows = []
        for offset, forecast in enumerate(forecasts):
            t = fitted.training_length + offset
            rows.append(
                {
                    "index": t,
                    "timestamp": series.timestamp_at(t).isoformat(),
                    "actual": float(values[t]) if t < n else np.nan,
                    "forecast": float(forecast),
                }
            )
        path = self.table_writer.write(input_dto.out_path, FORECAST_COLUMNS, rows)
        logger.info("Wrote {} forecasts to {}", len(rows), path)
        return PredictOutput(path=path, rows=rows)


@dataclass
class SpectrumInput:
    """Input DTO for a spectrum dump."""

    input_path: str
    out_path: str
    c: Optional[int] = None
    remove_top: bool = False
    step: Optional[timedelta] = None
    interpolate: bool = True
    truncate_after: Optional[datetime] = None


@dataclass
class SpectrumOutput:
    path: str
    n: int
    top: List[Sinusoid] = field(default_factory=list)


class SpectrumUseCase:
    """Use case for writing bin, frequency, amplitude, phase rows of a series."""

    def __init__(self, series_repo: SeriesRepository, table_writer: TableWriter):
        self.series_repo = series_repo
        self.table_writer = table_writer

    def execute(self, input_dto: SpectrumInput) -> SpectrumOutput:
        if input_dto.remove_top and input_dto.c is None:
            raise ValidationError("c", "removing components needs -c")
        prepared = prepare_series(
            self.series_repo,
            PrepareSeriesInput(
                path=input_dto.input_path,
                step=input_dto.step,
                interpolate=input_dto.interpolate,
                truncate_after=input_dto.truncate_after,
            ),
        )
        spectrum = spectral.dft(prepared.series)
        top = spectral.top_components(spectrum, input_dto.c) if input_dto.c else []
        if input_dto.remove_top:
            spectrum = spectral.remove_components(spectrum, top)

        path = self.table_writer.write(
            input_dto.out_path, SPECTRUM_COLUMNS, spectral.spectrum_rows(spectrum)
        )
        return SpectrumOutput(path=path, n=spectrum.n, top=top)
