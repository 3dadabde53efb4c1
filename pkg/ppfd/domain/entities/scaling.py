"""
ScalingState Entity - Constants of the min-max -> local -> max-abs pipeline.

    s_t = (x_t - x_min) / (x_max - x_min) + 1       (range [1, 2] on training data)
    l_t = (s_t - s_{t-1}) / s_{t-1}
    y_t = l_t / |L_max|

s_prev is the only mutable field; it tracks the most recent scaled value so
that forecasts can be inverted one step at a time.
"""

import math
from dataclasses import dataclass, replace

from ppfd.domain.exceptions import ScalingError


@dataclass
class ScalingState:
    """Fitted constants plus the running s_prev of one evaluation stream."""

    x_min: float
    x_max: float
    l_max_abs: float
    s_prev: float

    def __post_init__(self):
        if not self.x_max > self.x_min:
            raise ScalingError(
                f"zero range: x_max ({self.x_max}) must exceed x_min ({self.x_min})"
            )
        if not (self.l_max_abs > 0 and math.isfinite(self.l_max_abs)):
            raise ScalingError(f"|L_max| must be positive, got {self.l_max_abs}")

    @property
    def span(self) -> float:
        return self.x_max - self.x_min

    def scale(self, value: float) -> float:
        """Min-max step into [1, 2] (training range)."""
        return (value - self.x_min) / self.span + 1.0

    def descale(self, s: float) -> float:
        return (s - 1.0) * self.span + self.x_min

    def prime(self, value: float) -> None:
        """Reset s_prev from a raw observation without emitting a y."""
        self.s_prev = self.scale(value)

    def copy(self) -> "ScalingState":
        return replace(self)

    def to_dict(self) -> dict:
        return {
            "x_min": self.x_min,
            "x_max": self.x_max,
            "l_max_abs": self.l_max_abs,
            "s_prev": self.s_prev,
        }
