"""
Scaling Service - Forward pipeline and stepwise inversion for ScalingState.
"""

from typing import Tuple

import numpy as np
from loguru import logger

from ppfd.domain.entities.scaling import ScalingState
from ppfd.domain.entities.series import TimeSeries
from ppfd.domain.exceptions import ScalingError

# Ranges below this fraction of the magnitude count as constant.
RANGE_TOLERANCE = 1e-10


def fit_forward(series_x_prime: TimeSeries) -> Tuple[TimeSeries, ScalingState]:
    """
    Fit the scaling constants on a training series and transform it.

    The first sample is consumed by local normalization, so the output has
    N - 1 values and starts one step after the input.

    Raises:
        ScalingError: Fewer than 2 values or a constant series
    """
    if len(series_x_prime) < 2:
        raise ScalingError(f"need at least 2 values, got {len(series_x_prime)}")
    x = series_x_prime.require_complete().values
    x_min, x_max = float(np.min(x)), float(np.max(x))
    if x_max - x_min <= RANGE_TOLERANCE * max(abs(x_min), abs(x_max)):
        raise ScalingError(f"zero range: series is constant at {x_min}")

    s = (x - x_min) / (x_max - x_min) + 1.0
    local = np.diff(s) / s[:-1]
    state = ScalingState(
        x_min=x_min,
        x_max=x_max,
        l_max_abs=float(np.max(np.abs(local))),
        s_prev=float(s[-1]),
    )
    y = local / state.l_max_abs
    normalized = TimeSeries(
        values=y, origin=series_x_prime.timestamp_at(1), step=series_x_prime.step
    )
    return normalized, state


def apply_forward(value: float, state: ScalingState) -> float:
    """Transform one new observation with frozen constants; advances s_prev."""
    if state.s_prev <= 0:
        raise ScalingError(f"s_prev must be positive, got {state.s_prev}")
    s = state.scale(value)
    if not 1.0 <= s <= 2.0:
        logger.debug("Value {} outside the training range (s={:.4f})", value, s)
    y = (s - state.s_prev) / state.s_prev / state.l_max_abs
    state.s_prev = s
    return y


def forward_window(values: np.ndarray, state: ScalingState) -> Tuple[np.ndarray, ScalingState]:
    """
    Transform a raw window of m values into m - 1 normalized values.

    Works on a copy of state primed with values[0]; the returned copy has
    s_prev set from the last value, ready for invert_step.
    """
    values = np.asarray(values, dtype=np.float64)
    if values.size < 2:
        raise ScalingError("a window needs at least 2 raw values")
    window_state = state.copy()
    s = (values - window_state.x_min) / window_state.span + 1.0
    if np.any(s[:-1] <= 0):
        raise ScalingError("scaled value fell to <= 0; window is far below the training range")
    y = np.diff(s) / s[:-1] / window_state.l_max_abs
    window_state.s_prev = float(s[-1])
    return y, window_state


def invert_step(y_next: float, state: ScalingState) -> float:
    """
    Map a normalized forecast back to the X' scale. Does not mutate state.

    Raises:
        ScalingError: s_prev <= 0
    """
    if state.s_prev <= 0:
        raise ScalingError(f"cannot invert from s_prev={state.s_prev}")
    local = y_next * state.l_max_abs
    s_next = state.s_prev * (1.0 + local)
    return state.descale(s_next)
