"""
Dependency Injection Container

Manual constructor injection through factory functions. Stateless services
and repositories are cached singletons; use cases are built per call.

Usage in commands:
    use_case = get_run_experiment_use_case()
    output = use_case.execute(RunExperimentInput(...))
"""

from functools import lru_cache

from ppfd import __version__
from ppfd.app.core.config import Settings

# Use cases
from ppfd.application.use_cases.compare import CompareReportsUseCase
from ppfd.application.use_cases.evaluation import RunExperimentUseCase
from ppfd.application.use_cases.modeling import (
    FitModelUseCase,
    PredictUseCase,
    SpectrumUseCase,
)
from ppfd.application.use_cases.synth import GenerateSyntheticUseCase

# Implementations
from ppfd.infrastructure.forecasters.factory import DefaultForecasterFactory
from ppfd.infrastructure.persistence.repositories import (
    CsvSeriesRepository,
    JsonModelRepository,
    JsonReportRepository,
    PandasTableWriter,
)

# ============================================================
# Singletons (cached)
# ============================================================


@lru_cache()
def get_settings() -> Settings:
    """Get settings loaded from PPFD_* environment variables and .env."""
    return Settings()


@lru_cache()
def get_series_repository() -> CsvSeriesRepository:
    return CsvSeriesRepository()


@lru_cache()
def get_report_repository() -> JsonReportRepository:
    return JsonReportRepository()


@lru_cache()
def get_model_repository() -> JsonModelRepository:
    return JsonModelRepository()


@lru_cache()
def get_table_writer() -> PandasTableWriter:
    return PandasTableWriter()


@lru_cache()
def get_forecaster_factory() -> DefaultForecasterFactory:
    return DefaultForecasterFactory()


# ============================================================
# Use Case Factories (compose repositories + services)
# ============================================================


def get_generate_synthetic_use_case() -> GenerateSyntheticUseCase:
    return GenerateSyntheticUseCase(series_repo=get_series_repository())


def get_run_experiment_use_case() -> RunExperimentUseCase:
    """Get RunExperimentUseCase with dependencies injected."""
    return RunExperimentUseCase(
        series_repo=get_series_repository(),
        report_repo=get_report_repository(),
        table_writer=get_table_writer(),
        factory=get_forecaster_factory(),
        tool_version=__version__,
    )


def get_compare_reports_use_case() -> CompareReportsUseCase:
    return CompareReportsUseCase(
        report_repo=get_report_repository(), table_writer=get_table_writer()
    )


def get_fit_model_use_case() -> FitModelUseCase:
    return FitModelUseCase(
        series_repo=get_series_repository(),
        model_repo=get_model_repository(),
        factory=get_forecaster_factory(),
    )


def get_predict_use_case() -> PredictUseCase:
    return PredictUseCase(
        series_repo=get_series_repository(),
        model_repo=get_model_repository(),
        table_writer=get_table_writer(),
    )


def get_spectrum_use_case() -> SpectrumUseCase:
    return SpectrumUseCase(
        series_repo=get_series_repository(), table_writer=get_table_writer()
    )
