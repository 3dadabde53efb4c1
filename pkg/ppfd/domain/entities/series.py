"""
TimeSeries Entity - Uniformly sampled univariate observations.

Timestamps are implicit: index t lives at origin + t * step. Calendar logic
stays at the ingestion boundary; everything downstream works on integer indices.
"""

from dataclasses import dataclass, field
from datetime import datetime, timedelta
from typing import Iterator, List, Optional, Tuple

import numpy as np

from ppfd.domain.exceptions import EmptySeriesError, GapError, ValidationError

EPOCH = datetime(1970, 1, 1)


@dataclass(frozen=True)
class GapReport:
    """
    Missing slots of the expected uniform grid.

    Each gap is (start index, length in steps); gaps are sorted and disjoint.
    """

    gaps: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "gaps", tuple((int(s), int(n)) for s, n in self.gaps)
        )
        previous_end = -1
        for start, length in self.gaps:
            if length < 1:
                raise ValidationError("gaps", f"gap at {start} has length {length}")
            if start <= previous_end:
                raise ValidationError("gaps", "gaps must be sorted and disjoint")
            previous_end = start + length - 1

    @classmethod
    def from_mask(cls, missing: np.ndarray) -> "GapReport":
        """Build a report from a boolean mask of missing slots."""
        gaps: List[Tuple[int, int]] = []
        start: Optional[int] = None
        for i, flag in enumerate(missing):
            if flag and start is None:
                start = i
            elif not flag and start is not None:
                gaps.append((start, i - start))
                start = None
        if start is not None:
            gaps.append((start, len(missing) - start))
        return cls(tuple(gaps))

    @property
    def is_empty(self) -> bool:
        return not self.gaps

    @property
    def missing_count(self) -> int:
        return sum(length for _, length in self.gaps)

    def indices(self) -> Iterator[int]:
        for start, length in self.gaps:
            yield from range(start, start + length)

    def __len__(self) -> int:
        return len(self.gaps)


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """
    Domain entity for a univariate series on a uniform grid.

    Values are stored as a read-only float64 array. Slots flagged in the
    private missing mask hold NaN placeholders until interpolation; every
    other value must be finite.
    """

    values: np.ndarray
    origin: datetime = EPOCH
    step: timedelta = timedelta(days=1)
    _missing: Optional[np.ndarray] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64).reshape(-1)
        if values.size == 0:
            raise EmptySeriesError("time series must contain at least one value")
        if self.step <= timedelta(0):
            raise ValidationError("step", f"must be positive, got {self.step}")

        missing = self._missing
        if missing is not None:
            missing = np.asarray(missing, dtype=bool).reshape(-1)
            if missing.shape != values.shape:
                raise ValidationError("missing", "mask length differs from values")
            if not missing.any():
                missing = None
            else:
                missing = missing.copy()
                missing.flags.writeable = False

        known = values if missing is None else values[~missing]
        if not np.all(np.isfinite(known)):
            raise ValidationError("values", "all observed values must be finite")

        values.flags.writeable = False
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "_missing", missing)

    def __len__(self) -> int:
        return int(self.values.shape[0])

    def __getitem__(self, idx: int) -> float:
        return float(self.values[idx])

    @property
    def missing_mask(self) -> np.ndarray:
        if self._missing is None:
            return np.zeros(len(self), dtype=bool)
        return self._missing

    @property
    def is_complete(self) -> bool:
        return self._missing is None

    @property
    def end(self) -> datetime:
        """Timestamp of the last sample."""
        return self.timestamp_at(len(self) - 1)

    def timestamp_at(self, index: int) -> datetime:
        return self.origin + index * self.step

    def timestamps(self) -> List[datetime]:
        return [self.timestamp_at(i) for i in range(len(self))]

    def require_complete(self, min_length: int = 1) -> "TimeSeries":
        """Return self, or raise if gaps remain or the series is too short."""
        if not self.is_complete:
            raise GapError("series still has gaps; interpolate before use")
        if len(self) < min_length:
            raise ValidationError(
                "series", f"needs at least {min_length} values, got {len(self)}"
            )
        return self

    def slice(self, start: int, stop: int) -> "TimeSeries":
        """Sub-series [start, stop) with origin moved to index start."""
        if not 0 <= start < stop <= len(self):
            raise ValidationError("slice", f"[{start}, {stop}) outside [0, {len(self)})")
        missing = None if self._missing is None else self._missing[start:stop]
        return TimeSeries(
            values=self.values[start:stop],
            origin=self.timestamp_at(start),
            step=self.step,
            _missing=missing,
        )

    def to_dict(self) -> dict:
        return {
            "origin": self.origin.isoformat(),
            "step_seconds": self.step.total_seconds(),
            "values": [None if np.isnan(v) else float(v) for v in self.values],
        }
