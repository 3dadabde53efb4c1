"""
Fourier-sum baseline: every positive-frequency sinusoid plus the mean.

Extrapolating the full half-spectrum repeats the training series
periodically; nothing models the trend beyond it.
"""

from dataclasses import dataclass, field
from typing import List

import numpy as np

from ppfd.application.interfaces.forecasters import ForecastModel
from ppfd.domain.entities.series import TimeSeries
from ppfd.domain.entities.spectrum import Sinusoid
from ppfd.domain.services.spectral import dft, seasonal_values, top_components


@dataclass(eq=False)
class FourierModel(ForecastModel):
    mean: float
    sinusoids: List[Sinusoid] = field(default_factory=list)
    training_length: int = 0

    @property
    def min_history(self) -> int:
        return 0

    def values_at(self, t: np.ndarray) -> np.ndarray:
        return self.mean + seasonal_values(self.sinusoids, t)

    def predict_next(self, history: np.ndarray) -> float:
        return float(self.values_at(np.array([len(history)]))[0])

    def forecast(self, values: np.ndarray, start: int, stop: int) -> np.ndarray:
        return self.values_at(np.arange(start, stop))

    def seasonal_values(self, t: np.ndarray) -> np.ndarray:
        return seasonal_values(self.sinusoids, t)


def fourier_fit(training: TimeSeries) -> FourierModel:
    spectrum = dft(training)
    return FourierModel(
        mean=float(spectrum.coeffs[0].real) / spectrum.n,
        sinusoids=top_components(spectrum, spectrum.half),
        training_length=spectrum.n,
    )


def fourier_sum_forecast(training: TimeSeries, horizon: range) -> TimeSeries:
    """
    Evaluate the full Fourier sum of training at the indices in horizon.

    Index 0 is the first training sample; forecasting normally starts at
    len(training), but any range is accepted.
    """
    model = fourier_fit(training)
    t = np.arange(horizon.start, horizon.stop, horizon.step)
    return TimeSeries(
        values=model.values_at(t),
        origin=training.timestamp_at(horizon.start),
        step=training.step * horizon.step,
    )
