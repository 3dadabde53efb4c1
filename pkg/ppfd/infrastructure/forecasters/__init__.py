"""
Forecaster Implementations

ANN, ARIMA and Fourier-sum models, the PPFD composite, and the factory
that trains them.
"""

from ppfd.infrastructure.forecasters.ann import AnnModel, ann_fit
from ppfd.infrastructure.forecasters.arima import (
    ArimaModel,
    arima_fit,
    arima_predict,
    arima_select,
)
from ppfd.infrastructure.forecasters.factory import DefaultForecasterFactory
from ppfd.infrastructure.forecasters.fourier import FourierModel, fourier_sum_forecast
from ppfd.infrastructure.forecasters.ppfd import NormalizedModel, PpfdModel, ppfd_fit
from ppfd.infrastructure.forecasters.windows import WindowDataset, make_windows

__all__ = [
    "AnnModel",
    "ArimaModel",
    "FourierModel",
    "NormalizedModel",
    "PpfdModel",
    "WindowDataset",
    "DefaultForecasterFactory",
    "ann_fit",
    "arima_fit",
    "arima_predict",
    "arima_select",
    "fourier_sum_forecast",
    "make_windows",
    "ppfd_fit",
]
