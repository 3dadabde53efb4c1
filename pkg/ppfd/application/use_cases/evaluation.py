"""
Evaluation Use Cases

Forward-chaining experiments: per fold, fit on the training blocks, forecast
the validation block one step ahead from observed values, find peaks on the
validation actuals and score the forecast.
"""

import hashlib
import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timedelta
from typing import List, Optional, Tuple

import numpy as np
from loguru import logger

from ppfd.application.interfaces.forecasters import ForecasterFactory
from ppfd.application.interfaces.repositories import (
    ReportRepository,
    SeriesRepository,
    TableWriter,
)
from ppfd.application.use_cases.ingest import PrepareSeriesInput, prepare_series
from ppfd.domain.entities.evaluation import (
    EvaluationReport,
    ExperimentConfig,
    ExperimentResult,
    Fold,
    MetricReport,
    ModelKind,
    PeakSet,
    RunManifest,
    SeriesSummary,
)
from ppfd.domain.entities.series import TimeSeries
from ppfd.domain.exceptions import ExperimentError
from ppfd.domain.services import metrics
from ppfd.domain.services.folds import forward_chain_splits
from ppfd.domain.services.peaks import find_peaks
from ppfd.domain.services.preprocessing import describe

PLOT_COLUMNS = ("index", "actual", "forecast", "is_peak")


@dataclass
class FoldOutcome:
    """Everything one fold produced; plot data is taken from the last one."""

    index: int
    fold: Fold
    report: MetricReport
    actual: np.ndarray
    forecast: np.ndarray
    peaks: PeakSet
    seasonal: Optional[np.ndarray] = None

    def plot_rows(self) -> List[dict]:
        peak_set = set(self.peaks.indices)
        start = self.fold.validate[0]
        rows = []
        for i, (actual, forecast) in enumerate(zip(self.actual, self.forecast)):
            row = {
                "index": start + i,
                "actual": float(actual),
                "forecast": float(forecast),
                "is_peak": int(i in peak_set),
            }
            if self.seasonal is not None:
                row["seasonal"] = float(self.seasonal[i])
            rows.append(row)
        return rows


def resolved_c(config: ExperimentConfig, n: int) -> Optional[int]:
    """The component count a run actually uses: c for PPFD, ceil(N/2) for FOURIER."""
    if config.model.is_ppfd:
        return config.c
    if config.model is ModelKind.FOURIER:
        return math.ceil(n / 2)
    return None


def evaluate_fold(
    series: TimeSeries,
    fold: Fold,
    index: int,
    config: ExperimentConfig,
    factory: ForecasterFactory,
) -> FoldOutcome:
    """Fit, forecast and score a single fold."""
    training = series.slice(*fold.train)
    model = factory.fit(config.model, training, config, seed=config.seed + index)

    start, stop = fold.validate
    forecast = model.forecast(series.values, start, stop)
    actual = np.array(series.values[start:stop])
    peaks = find_peaks(actual)
    scaled_actual, scaled_forecast = metrics.normalize_pair(actual, forecast)
    report = metrics.report(scaled_actual, scaled_forecast, peaks, config.alpha)

    logger.info(
        "Fold {}: train [0, {}), validate [{}, {}) rmse={:.5f} peak_rmse={:.5f} "
        "under={} over={}",
        index,
        fold.train[1],
        start,
        stop,
        report.rmse,
        report.peak_rmse,
        report.under_predicted,
        report.over_predicted,
    )
    return FoldOutcome(
        index=index,
        fold=fold,
        report=report,
        actual=actual,
        forecast=forecast,
        peaks=peaks,
        seasonal=model.seasonal_values(np.arange(start, stop)),
    )


def run_folds(
    series: TimeSeries, config: ExperimentConfig, factory: ForecasterFactory
) -> List[FoldOutcome]:
    """
    Evaluate every fold of the forward-chaining plan, in fold order.

    Raises:
        FoldPlanError: Series too short for the requested folds
        ExperimentError: A fold failed; carries the fold index and cause
    """
    series.require_complete(min_length=2)
    config = config.for_step(series.step)
    plan = forward_chain_splits(len(series), config.folds, min_block=config.window + 2)
    logger.info(
        "Evaluating {} on {} samples with {} folds (window={}, alpha={})",
        config.model.value,
        len(series),
        plan.k,
        config.window,
        config.alpha,
    )

    def run_one(item: Tuple[int, Fold]) -> FoldOutcome:
        index, fold = item
        try:
            return evaluate_fold(series, fold, index, config, factory)
        except Exception as exc:
            raise ExperimentError(index, exc) from exc

    items = list(enumerate(plan))
    if config.workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            return list(pool.map(run_one, items))
    return [run_one(item) for item in items]


def summarize(outcomes: List[FoldOutcome]) -> EvaluationReport:
    per_fold = tuple(o.report for o in outcomes)
    return EvaluationReport(per_fold=per_fold, averaged=metrics.average_reports(per_fold))


def run_experiment(
    series: TimeSeries, config: ExperimentConfig, factory: ForecasterFactory
) -> EvaluationReport:
    """Run the configured model over all folds and aggregate the reports."""
    return summarize(run_folds(series, config, factory))


def config_hash(config_echo: dict) -> str:
    canonical = json.dumps(config_echo, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


@dataclass
class RunExperimentInput:
    """Input DTO for a file-to-report experiment."""

    input_path: str
    config: ExperimentConfig
    out_path: str
    step: Optional[timedelta] = None
    interpolate: bool = True
    truncate_after: Optional[datetime] = None
    plot_data_path: Optional[str] = None


@dataclass
class RunExperimentOutput:
    """Output DTO for a file-to-report experiment."""

    report_path: str
    plot_data_path: Optional[str]
    result: ExperimentResult
    summary: SeriesSummary


class RunExperimentUseCase:
    """
    Use case for evaluating one model on one CSV series.

    Business rules:
    - Preprocessing order is ingest, interpolate, truncate
    - Models are refit from scratch per fold (spectrum and scaling included)
    - The report echoes the full configuration and a manifest for reruns
    """

    def __init__(
        self,
        series_repo: SeriesRepository,
        report_repo: ReportRepository,
        table_writer: TableWriter,
        factory: ForecasterFactory,
        tool_version: str,
    ):
        self.series_repo = series_repo
        self.report_repo = report_repo
        self.table_writer = table_writer
        self.factory = factory
        self.tool_version = tool_version

    def execute(self, input_dto: RunExperimentInput) -> RunExperimentOutput:
        """
        Run the experiment and write its report (and plot data if asked).

        Raises:
            DomainError: Ingestion or any fold failed
            DataSourceError: Input unreadable or output unwritable
        """
        started = time.perf_counter()
        prepared = prepare_series(
            self.series_repo,
            PrepareSeriesInput(
                path=input_dto.input_path,
                step=input_dto.step,
                interpolate=input_dto.interpolate,
                truncate_after=input_dto.truncate_after,
            ),
        )
        series = prepared.series
        config = input_dto.config.for_step(series.step)

        outcomes = run_folds(series, config, self.factory)
        report = summarize(outcomes)

        config_echo = config.to_dict()
        config_echo["c"] = resolved_c(config, len(series))
        config_echo["series_length"] = len(series)
        config_echo["preprocessing"] = {
            "step_seconds": series.step.total_seconds(),
            "interpolate": input_dto.interpolate,
            "truncate_after": (
                input_dto.truncate_after.isoformat()
                if input_dto.truncate_after
                else None
            ),
        }

        outputs = [input_dto.out_path]
        if input_dto.plot_data_path:
            last = outcomes[-1]
            columns = list(PLOT_COLUMNS)
            if last.seasonal is not None:
                columns.append("seasonal")
            self.table_writer.write(input_dto.plot_data_path, columns, last.plot_rows())
            outputs.append(input_dto.plot_data_path)

        manifest = RunManifest(
            tool_version=self.tool_version,
            input_path=input_dto.input_path,
            input_sha256=prepared.input_sha256,
            config_hash=config_hash(config_echo),
            outputs=tuple(outputs),
        )
        result = ExperimentResult(
            config=config_echo,
            report=report,
            manifest=manifest,
            runtime_seconds=time.perf_counter() - started,
        )
        self.report_repo.save(input_dto.out_path, result)
        logger.info("Report written to {}", input_dto.out_path)

        return RunExperimentOutput(
            report_path=input_dto.out_path,
            plot_data_path=input_dto.plot_data_path,
            result=result,
            summary=describe(series),
        )
