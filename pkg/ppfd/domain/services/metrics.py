"""
Metrics Service - Squared and sign-weighted errors plus peak accounting.

Over-predictions (forecast >= actual, ties included) carry weight alpha in
the weighted error; under-predictions carry weight 1.
"""

import math
from typing import Sequence, Tuple, Union

import numpy as np

from ppfd.domain.entities.evaluation import MetricReport, PeakSet
from ppfd.domain.entities.series import TimeSeries
from ppfd.domain.exceptions import ValidationError

ArrayLike = Union[TimeSeries, Sequence[float], np.ndarray]


def _as_array(values: ArrayLike) -> np.ndarray:
    if isinstance(values, TimeSeries):
        return values.values
    return np.asarray(values, dtype=np.float64).reshape(-1)


def _pair(actual: ArrayLike, forecast: ArrayLike) -> Tuple[np.ndarray, np.ndarray]:
    a, f = _as_array(actual), _as_array(forecast)
    if a.size == 0:
        raise ValidationError("actual", "metrics need at least one value")
    if a.shape != f.shape:
        raise ValidationError(
            "forecast", f"length {f.size} does not match actual length {a.size}"
        )
    return a, f


def _check_alpha(alpha: float) -> None:
    if not 0.0 <= alpha <= 1.0 or math.isnan(alpha):
        raise ValidationError("alpha", f"must lie in [0, 1], got {alpha}")


def mse(actual: ArrayLike, forecast: ArrayLike) -> float:
    a, f = _pair(actual, forecast)
    return float(np.mean((f - a) ** 2))


def wse(actual: ArrayLike, forecast: ArrayLike, alpha: float) -> float:
    _check_alpha(alpha)
    a, f = _pair(actual, forecast)
    weights = np.where(f >= a, alpha, 1.0)
    return float(np.mean(weights * (f - a) ** 2))


def normalize_pair(actual: ArrayLike, forecast: ArrayLike) -> Tuple[np.ndarray, np.ndarray]:
    """
    Min-max scale both series with the actual series' own min and max.

    A constant actual series is only shifted (scale factor 1).
    """
    a, f = _pair(actual, forecast)
    low = float(np.min(a))
    span = float(np.max(a)) - low
    if span == 0.0:
        span = 1.0
    return (a - low) / span, (f - low) / span


def report(
    actual: ArrayLike,
    forecast: ArrayLike,
    peaks: PeakSet,
    alpha: float,
) -> MetricReport:
    """
    Build a MetricReport over all points and over the peak indices.

    Peak errors are 0.0 when there are no peaks.

    Raises:
        ValidationError: Length mismatch, alpha outside [0, 1], or a peak
            index outside the series
    """
    _check_alpha(alpha)
    a, f = _pair(actual, forecast)
    idx = peaks.as_array()
    if idx.size and (idx[0] < 0 or idx[-1] >= a.size):
        raise ValidationError("peaks", f"peak index outside [0, {a.size})")

    if idx.size:
        peak_rmse = math.sqrt(mse(a[idx], f[idx]))
        peak_rwse = math.sqrt(wse(a[idx], f[idx], alpha))
        under = int(np.count_nonzero(f[idx] < a[idx]))
    else:
        peak_rmse = peak_rwse = 0.0
        under = 0

    return MetricReport(
        rmse=math.sqrt(mse(a, f)),
        rwse=math.sqrt(wse(a, f, alpha)),
        peak_rmse=peak_rmse,
        peak_rwse=peak_rwse,
        under_predicted=under,
        over_predicted=int(idx.size) - under,
        n_total=int(a.size),
        n_peaks=int(idx.size),
        alpha=alpha,
    )


def average_reports(reports: Sequence[MetricReport]) -> MetricReport:
    """Arithmetic mean of the error fields; counts are summed."""
    if not reports:
        raise ValidationError("reports", "nothing to average")
    alphas = {r.alpha for r in reports}
    if len(alphas) > 1:
        raise ValidationError("alpha", f"reports disagree on alpha: {sorted(alphas)}")

    def mean(name: str) -> float:
        return float(np.mean([getattr(r, name) for r in reports]))

    def total(name: str) -> int:
        return sum(getattr(r, name) for r in reports)

    return MetricReport(
        rmse=mean("rmse"),
        rwse=mean("rwse"),
        peak_rmse=mean("peak_rmse"),
        peak_rwse=mean("peak_rwse"),
        under_predicted=total("under_predicted"),
        over_predicted=total("over_predicted"),
        n_total=total("n_total"),
        n_peaks=total("n_peaks"),
        alpha=reports[0].alpha,
    )
