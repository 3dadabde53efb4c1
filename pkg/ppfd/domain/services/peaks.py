"""
Peak Service - Local maxima of an observed series.

Thin wrapper over scipy.signal.find_peaks with no height, prominence or
distance filters. Plateaus report their left-biased midpoint.
"""

from typing import Union

import numpy as np
from scipy import signal

from ppfd.domain.entities.evaluation import PeakSet
from ppfd.domain.entities.series import TimeSeries


def find_peaks(series: Union[TimeSeries, np.ndarray]) -> PeakSet:
    if isinstance(series, TimeSeries):
        values = series.values
    else:
        values = np.asarray(series, dtype=np.float64)
    if values.size < 3:
        return PeakSet()
    indices, _ = signal.find_peaks(values)
    return PeakSet(tuple(indices))
