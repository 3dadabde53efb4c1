"""
SynthSpec Entity - Parameters of the noise-free synthetic traffic series.

value[t] = slope * t + intercept + sum_j amplitude_j * sin(2*pi*t / period_j)
"""

from dataclasses import dataclass, field
from datetime import datetime, timedelta
from typing import Tuple

from ppfd.domain.exceptions import ValidationError


@dataclass(frozen=True)
class SeasonalComponent:
    """One sine seasonality: period in samples and amplitude in value units."""

    period: float
    amplitude: float

    def __post_init__(self):
        if not self.period > 1:
            raise ValidationError("period", f"must be > 1 sample, got {self.period}")
        if self.amplitude < 0:
            raise ValidationError("amplitude", f"must be >= 0, got {self.amplitude}")

    @classmethod
    def parse(cls, text: str) -> "SeasonalComponent":
        """Parse 'period:amplitude', e.g. '7:80000000'."""
        try:
            period, amplitude = text.split(":")
            return cls(float(period), float(amplitude))
        except ValueError as exc:
            raise ValidationError(
                "component", f"expected period:amplitude, got {text!r}"
            ) from exc


# Weekly, monthly and yearly seasonality on daily samples.
DEFAULT_COMPONENTS: Tuple[SeasonalComponent, ...] = (
    SeasonalComponent(7, 80_000_000),
    SeasonalComponent(30, 72_000_000),
    SeasonalComponent(365, 56_000_000),
)


@dataclass(frozen=True)
class SynthSpec:
    n: int = 7500
    slope: float = 100_000.0
    intercept: float = 1_000_000_000.0
    components: Tuple[SeasonalComponent, ...] = field(
        default_factory=lambda: DEFAULT_COMPONENTS
    )
    origin: datetime = datetime(2000, 1, 1)
    step: timedelta = timedelta(days=1)

    def __post_init__(self):
        if self.n < 2:
            raise ValidationError("n", f"must be >= 2, got {self.n}")
        object.__setattr__(self, "components", tuple(self.components))
