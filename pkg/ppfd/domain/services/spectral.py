"""
Spectral Service - DFT, seasonal component extraction and spectrum filtering.

Transforms use scipy.fft, which handles arbitrary lengths exactly (no padding),
so bin k of a length-N series always sits at frequency k / N.
"""

import math
from datetime import datetime, timedelta
from typing import List, Sequence, Tuple

import numpy as np
from scipy import fft, signal

from ppfd.domain.entities.series import EPOCH, TimeSeries
from ppfd.domain.entities.spectrum import Sinusoid, Spectrum
from ppfd.domain.exceptions import ComponentRangeError, SpectrumError, ValidationError

IMAGINARY_TOLERANCE = 1e-8


def dft(series: TimeSeries) -> Spectrum:
    """Forward transform of a complete series of length >= 2."""
    series.require_complete(min_length=2)
    return Spectrum(
        coeffs=fft.fft(series.values),
        n=len(series),
        step=series.step,
        origin=series.origin,
    )


def idft(spectrum: Spectrum) -> TimeSeries:
    """
    Inverse transform back onto the source grid.

    Raises:
        SpectrumError: The result has a non-negligible imaginary part
    """
    x = fft.ifft(spectrum.coeffs)
    peak = float(np.max(np.abs(x))) if x.size else 0.0
    residue = float(np.max(np.abs(x.imag))) if x.size else 0.0
    if residue > IMAGINARY_TOLERANCE * peak:
        raise SpectrumError(
            f"inverse transform is not real (imaginary residue {residue:.3g} "
            f"against peak {peak:.3g}); spectrum is not conjugate symmetric"
        )
    return TimeSeries(values=x.real, origin=spectrum.origin, step=spectrum.step)


def _phase(coeff: complex) -> float:
    """Argument of coeff folded into (-pi, pi]."""
    phi = math.atan2(coeff.imag, coeff.real)
    return math.pi if phi <= -math.pi else phi


def top_components(spectrum: Spectrum, c: int) -> List[Sinusoid]:
    """
    The c highest-amplitude sinusoids among bins 1..floor(N/2).

    Ranked by descending amplitude; equal amplitudes go to the lower bin.

    Raises:
        ComponentRangeError: c outside [1, floor(N/2)]
    """
    half = spectrum.half
    if not 1 <= c <= half:
        raise ComponentRangeError(c, 1, half)

    amplitudes = spectrum.amplitudes()[1:]
    bins = np.arange(1, half + 1)
    order = np.lexsort((bins, -amplitudes))[:c]
    return [
        Sinusoid(
            bin=int(bins[i]),
            n=spectrum.n,
            amplitude=float(amplitudes[i]),
            phase=_phase(complex(spectrum.coeffs[bins[i]])),
        )
        for i in order
    ]


def seasonal_values(sinusoids: Sequence[Sinusoid], t: np.ndarray) -> np.ndarray:
    """Sum of the cosines at integer positions t (zeros when there are none)."""
    t = np.asarray(t, dtype=np.float64)
    total = np.zeros_like(t)
    for s in sinusoids:
        total += s.values_at(t)
    return total


def sinusoid_series(
    s: Sinusoid,
    t_start: int,
    t_end: int,
    origin: datetime = EPOCH,
    step: timedelta = timedelta(days=1),
) -> TimeSeries:
    """Cosine samples at t_start..t_end inclusive; origin is the grid's index 0."""
    if t_end < t_start:
        raise ValidationError("t_end", f"{t_end} precedes t_start {t_start}")
    t = np.arange(t_start, t_end + 1)
    return TimeSeries(
        values=s.values_at(t), origin=origin + t_start * step, step=step
    )


def remove_components(spectrum: Spectrum, sinusoids: Sequence[Sinusoid]) -> Spectrum:
    """
    Zero each sinusoid's bin and its conjugate partner.

    Raises:
        ComponentRangeError: A bin is 0 or above floor(N/2)
        SpectrumError: A sinusoid was extracted from a different length
    """
    coeffs = np.array(spectrum.coeffs)
    for s in sinusoids:
        if s.n != spectrum.n:
            raise SpectrumError(
                f"sinusoid from a length-{s.n} series applied to length {spectrum.n}"
            )
        if not 1 <= s.bin <= spectrum.half:
            raise ComponentRangeError(s.bin, 1, spectrum.half, what="bin")
        coeffs[s.bin] = 0.0
        coeffs[spectrum.n - s.bin] = 0.0
    return Spectrum(
        coeffs=coeffs, n=spectrum.n, step=spectrum.step, origin=spectrum.origin
    )


def decompose(
    series: TimeSeries, c: int, detrend: bool = False
) -> Tuple[List[Sinusoid], TimeSeries]:
    """
    Split a series into its top-c sinusoids and the residual X'.

    With detrend, bins are ranked on the spectrum of the series minus its
    least-squares line; the line stays in the residual.
    """
    if not detrend:
        spectrum = dft(series)
        sinusoids = top_components(spectrum, c)
        return sinusoids, idft(remove_components(spectrum, sinusoids))

    series.require_complete(min_length=2)
    flat = TimeSeries(
        values=signal.detrend(series.values, type="linear"),
        origin=series.origin,
        step=series.step,
    )
    sinusoids = top_components(dft(flat), c)
    residual = series.values - seasonal_values(sinusoids, np.arange(len(series)))
    return sinusoids, TimeSeries(values=residual, origin=series.origin, step=series.step)


def spectrum_rows(spectrum: Spectrum) -> List[dict]:
    """One row per bin 0..floor(N/2): bin, frequency, amplitude, phase."""
    amplitudes = spectrum.amplitudes()
    return [
        {
            "bin": k,
            "frequency": k / spectrum.n,
            "amplitude": float(amplitudes[k]),
            "phase": _phase(complex(spectrum.coeffs[k])),
        }
        for k in range(spectrum.half + 1)
    ]
