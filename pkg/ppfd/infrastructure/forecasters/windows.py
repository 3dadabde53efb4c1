"""
Sliding windows for one-step-ahead supervised learning.
"""

from dataclasses import dataclass
from typing import Union

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from ppfd.domain.entities.series import TimeSeries
from ppfd.domain.exceptions import InsufficientHistoryError, ValidationError


@dataclass(frozen=True, eq=False)
class WindowDataset:
    """inputs[i] = x[i..i+w-1] and targets[i] = x[i+w], in chronological order."""

    window_size: int
    inputs: np.ndarray
    targets: np.ndarray

    def __post_init__(self):
        if self.inputs.shape != (self.targets.shape[0], self.window_size):
            raise ValidationError(
                "inputs", f"expected shape ({self.targets.shape[0]}, {self.window_size})"
            )

    def __len__(self) -> int:
        return int(self.targets.shape[0])


def make_windows(series: Union[TimeSeries, np.ndarray], w: int) -> WindowDataset:
    """
    Enumerate the N - w (window, next value) pairs of a series.

    Raises:
        InsufficientHistoryError: N <= w
    """
    if w < 1:
        raise ValidationError("window", f"must be >= 1, got {w}")
    values = series.values if isinstance(series, TimeSeries) else np.asarray(series, dtype=np.float64)
    if values.shape[0] <= w:
        raise InsufficientHistoryError(w + 1, values.shape[0], what=f"window of {w}")
    return WindowDataset(
        window_size=w,
        inputs=np.array(sliding_window_view(values[:-1], w)),
        targets=np.array(values[w:]),
    )
