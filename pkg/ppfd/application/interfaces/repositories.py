"""
Repository Interfaces (Ports)

Abstract interfaces that define how the application layer reads and writes
series, reports, models and tables. Implementations are in the
infrastructure layer.
"""

from abc import ABC, abstractmethod
from datetime import timedelta
from typing import List, Optional, Sequence, Tuple

from ppfd.application.interfaces.forecasters import FittedModel
from ppfd.domain.entities.evaluation import ExperimentResult
from ppfd.domain.entities.series import GapReport, TimeSeries


class SeriesRepository(ABC):
    """Abstract interface for time-series files."""

    @abstractmethod
    def load(
        self, path: str, step: Optional[timedelta] = None
    ) -> Tuple[TimeSeries, GapReport]:
        """
        Read a series and report the grid slots it is missing.

        Args:
            path: Source file
            step: Sampling interval; required for integer timestamps,
                inferred from ISO timestamps when omitted

        Raises:
            DataSourceError: Unreadable or malformed file
            SeriesGridError: Timestamps do not fit the grid
        """
        pass

    @abstractmethod
    def save(self, path: str, series: TimeSeries) -> str:
        """Write a series; returns the path written."""
        pass

    @abstractmethod
    def sha256(self, path: str) -> str:
        """Content hash of a stored file."""
        pass


class ReportRepository(ABC):
    """Abstract interface for experiment report documents."""

    @abstractmethod
    def save(self, path: str, result: ExperimentResult) -> str:
        """Write a report; returns the path written."""
        pass

    @abstractmethod
    def load(self, path: str) -> ExperimentResult:
        """
        Read a report.

        Raises:
            ReportSchemaError: Unsupported schema version
            DataSourceError: Unreadable or malformed file
        """
        pass


class ModelRepository(ABC):
    """Abstract interface for fitted model documents."""

    @abstractmethod
    def save(self, path: str, fitted: FittedModel) -> str:
        pass

    @abstractmethod
    def load(self, path: str) -> FittedModel:
        pass


class TableWriter(ABC):
    """Abstract interface for tabular output (plot data, spectra, comparisons)."""

    @abstractmethod
    def write(self, path: str, columns: Sequence[str], rows: List[dict]) -> str:
        """Write rows as CSV with the given column order; returns the path."""
        pass

    @abstractmethod
    def render(self, columns: Sequence[str], rows: List[dict], fmt: str = "text") -> str:
        """Format rows as an aligned text table ('text') or CSV ('csv')."""
        pass
