"""
Forecaster Interfaces (Ports)

One-step-ahead models and the factory that trains them. Implementations
(ANN, ARIMA, Fourier-sum, PPFD) live in the infrastructure layer.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from datetime import datetime, timedelta
from typing import Optional

import numpy as np

from ppfd.domain.entities.evaluation import ExperimentConfig, ModelKind
from ppfd.domain.entities.series import TimeSeries


class ForecastModel(ABC):
    """
    A fitted model predicting x[t] from observations x[0..t-1].

    History index 0 is the first training sample, so len(history) is the
    index being forecast.
    """

    @property
    @abstractmethod
    def min_history(self) -> int:
        """Fewest observations predict_next accepts."""
        pass

    @property
    def lookback(self) -> Optional[int]:
        """Trailing observations actually used; None means the whole history."""
        return None

    @abstractmethod
    def predict_next(self, history: np.ndarray) -> float:
        """
        Forecast the value following history.

        Raises:
            InsufficientHistoryError: len(history) < min_history
        """
        pass

    def forecast(self, values: np.ndarray, start: int, stop: int) -> np.ndarray:
        """One-step-ahead forecasts for indices start..stop-1 from observed values."""
        values = np.asarray(values, dtype=np.float64)
        return np.array([self.predict_next(values[:t]) for t in range(start, stop)])

    def seasonal_values(self, t: np.ndarray) -> Optional[np.ndarray]:
        """Seasonal part of the forecast at positions t, for models that have one."""
        return None


class ForecasterFactory(ABC):
    """Abstract interface for training a model of a given kind."""

    @abstractmethod
    def fit(
        self,
        kind: ModelKind,
        training: TimeSeries,
        config: ExperimentConfig,
        seed: int,
    ) -> ForecastModel:
        """
        Train a model on a complete series.

        Args:
            kind: Model family
            training: Gap-free training series
            config: Hyperparameters (c, window, ANN and ARIMA settings)
            seed: Seed for any random initialisation

        Raises:
            DomainError: Any stage of fitting fails
        """
        pass


@dataclass
class FittedModel:
    """A trained model plus the grid it was trained on, as persisted by fit."""

    kind: ModelKind
    model: ForecastModel
    training_length: int
    origin: datetime
    step: timedelta
    config: ExperimentConfig
