"""
PPFD composite and the normalized residual wrapper.

Fitting:
    1. DFT of the training series (optionally minus its linear trend),
       keep the top-c sinusoids
    2. Subtract them from the training series to get the residual X'
    3. Scale X' (min-max to [1, 2], local change, max-abs) into y
    4. Fit the base model (ANN or ARIMA) on y

Forecasting x[t]:
    seasonal(t) + inverse scaling of the base model's prediction from the
    normalized residual history observed - seasonal.
"""

from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np

from ppfd.application.interfaces.forecasters import ForecastModel
from ppfd.domain.entities.scaling import ScalingState
from ppfd.domain.entities.series import TimeSeries
from ppfd.domain.entities.spectrum import Sinusoid
from ppfd.domain.exceptions import InsufficientHistoryError
from ppfd.domain.services.scaling import fit_forward, forward_window, invert_step
from ppfd.domain.services.spectral import decompose, seasonal_values

BaseFitter = Callable[[TimeSeries], ForecastModel]


@dataclass(eq=False)
class NormalizedModel(ForecastModel):
    """
    A base model fitted on the scaled local-change series y.

    Raw history is pushed through the frozen scaling constants before the
    base model sees it; the base forecast is inverted back to raw units.
    """

    base: ForecastModel
    scaling: ScalingState

    @property
    def min_history(self) -> int:
        return max(self.base.min_history, 1) + 1

    @property
    def lookback(self) -> Optional[int]:
        return None if self.base.lookback is None else self.base.lookback + 1

    def predict_next(self, history: np.ndarray) -> float:
        history = np.asarray(history, dtype=np.float64)
        if history.shape[0] < self.min_history:
            raise InsufficientHistoryError(
                self.min_history, history.shape[0], what="normalized history"
            )
        raw = history if self.lookback is None else history[-self.lookback :]
        y, state = forward_window(raw, self.scaling)
        return invert_step(self.base.predict_next(y), state)


def normalized_fit(series: TimeSeries, fit_base: BaseFitter) -> NormalizedModel:
    y, state = fit_forward(series)
    return NormalizedModel(base=fit_base(y), scaling=state)


@dataclass(eq=False)
class PpfdModel(ForecastModel):
    """c cosine waves plus a normalized residual model, anchored at training index 0."""

    sinusoids: List[Sinusoid]
    residual_model: NormalizedModel
    training_length: int = 0

    @property
    def c(self) -> int:
        return len(self.sinusoids)

    @property
    def min_history(self) -> int:
        return self.residual_model.min_history

    def seasonal_values(self, t: np.ndarray) -> np.ndarray:
        return seasonal_values(self.sinusoids, t)

    def predict_next(self, history: np.ndarray) -> float:
        history = np.asarray(history, dtype=np.float64)
        t = history.shape[0]
        if t < self.min_history:
            raise InsufficientHistoryError(self.min_history, t, what="PPFD history")
        lookback = self.residual_model.lookback
        start = 0 if lookback is None else max(0, t - lookback)
        residual = history[start:t] - self.seasonal_values(np.arange(start, t))
        seasonal_next = float(self.seasonal_values(np.array([t]))[0])
        return seasonal_next + self.residual_model.predict_next(residual)


def ppfd_fit(
    training: TimeSeries, c: int, fit_base: BaseFitter, detrend: bool = False
) -> PpfdModel:
    """
    Decompose, normalize and fit the residual model.

    detrend ranks the spectrum of the linearly detrended training series;
    the trend is then left to the residual model.

    Raises:
        ComponentRangeError: c > floor(N/2)
        ScalingError: The residual is constant (e.g. every bin removed)
    """
    sinusoids, residual = decompose(training, c, detrend=detrend)
    return PpfdModel(
        sinusoids=sinusoids,
        residual_model=normalized_fit(residual, fit_base),
        training_length=len(training),
    )
