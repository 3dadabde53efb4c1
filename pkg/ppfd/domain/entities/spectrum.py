"""
Spectrum and Sinusoid Entities - Frequency-domain view of a series.
"""

import math
from dataclasses import dataclass
from datetime import datetime, timedelta

import numpy as np

from ppfd.domain.entities.series import EPOCH
from ppfd.domain.exceptions import SpectrumError, ValidationError


@dataclass(frozen=True, eq=False)
class Spectrum:
    """
    Complex DFT bins of a real series of length n.

    origin and step describe the grid of the source series so that the
    inverse transform lands back on it.
    """

    coeffs: np.ndarray
    n: int
    step: timedelta = timedelta(days=1)
    origin: datetime = EPOCH

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=np.complex128).reshape(-1)
        if coeffs.shape[0] != self.n:
            raise SpectrumError(
                f"spectrum length {coeffs.shape[0]} does not match n={self.n}"
            )
        coeffs.flags.writeable = False
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def half(self) -> int:
        """Highest usable positive-frequency bin, floor(n / 2)."""
        return self.n // 2

    def amplitudes(self) -> np.ndarray:
        """One-sided amplitudes for bins 0..floor(n/2) in source units."""
        amps = 2.0 * np.abs(self.coeffs[: self.half + 1]) / self.n
        amps[0] /= 2.0
        if self.n % 2 == 0:
            amps[self.half] /= 2.0
        return amps

    def is_conjugate_symmetric(self, rtol: float = 1e-9) -> bool:
        if self.n < 2:
            return True
        k = np.arange(1, self.n)
        scale = max(float(np.max(np.abs(self.coeffs))), 1e-300)
        mismatch = np.abs(self.coeffs[k] - np.conj(self.coeffs[self.n - k]))
        return bool(np.all(mismatch <= rtol * scale))


@dataclass(frozen=True)
class Sinusoid:
    """
    A seasonal component amplitude * cos(2*pi*frequency*t + phase).

    bin is the DFT bin index k of the series it was extracted from; the
    frequency is k / n cycles per sample.
    """

    bin: int
    n: int
    amplitude: float
    phase: float

    def __post_init__(self):
        if self.n < 2:
            raise ValidationError("n", f"source length must be >= 2, got {self.n}")
        if self.amplitude < 0 or not math.isfinite(self.amplitude):
            raise ValidationError("amplitude", f"must be finite and >= 0")

    @property
    def frequency(self) -> float:
        return self.bin / self.n

    @property
    def period(self) -> float:
        """Period in samples (n / bin)."""
        return math.inf if self.bin == 0 else self.n / self.bin

    def values_at(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=np.float64)
        return self.amplitude * np.cos(2.0 * np.pi * self.frequency * t + self.phase)

    def to_dict(self) -> dict:
        return {
            "bin": self.bin,
            "n": self.n,
            "frequency": self.frequency,
            "amplitude": self.amplitude,
            "phase": self.phase,
        }
