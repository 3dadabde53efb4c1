"""
ARIMA(p, 1, q) by conditional sum of squares.

The series is differenced once. Innovations are computed recursively with
zero pre-sample values:

    e_t = dx_t - mu - sum_i ar_i * dx_{t-i} - sum_j ma_j * e_{t-j}

and the mean squared innovation over t >= burn_in is minimised. Pure AR
orders are solved exactly by least squares; orders with MA terms start from
the least-squares AR solution and are refined with L-BFGS-B.
"""

import math
from dataclasses import dataclass, field
from itertools import product
from typing import List, Optional, Tuple

import numpy as np
from loguru import logger
from scipy import optimize, signal

from ppfd.application.interfaces.forecasters import ForecastModel
from ppfd.domain.exceptions import InsufficientHistoryError, ModelFitError

COEFFICIENT_BOUND = 0.99
PENALTY = 1e10


def innovations(
    diff: np.ndarray, intercept: float, ar: np.ndarray, ma: np.ndarray
) -> np.ndarray:
    """One-step innovations of the differenced series under given parameters."""
    u = signal.lfilter(np.r_[1.0, -ar], [1.0], diff) - intercept
    if ma.size == 0:
        return u
    return signal.lfilter([1.0], np.r_[1.0, ma], u)


@dataclass(eq=False)
class ArimaModel(ForecastModel):
    """Fitted ARIMA(p, 1, q) parameters; d is always 1."""

    p: int
    q: int
    intercept: float
    ar: np.ndarray
    ma: np.ndarray
    residual_history: np.ndarray = field(default_factory=lambda: np.zeros(0))
    sse: float = 0.0
    n_obs: int = 0
    d: int = 1

    def __post_init__(self):
        self.ar = np.asarray(self.ar, dtype=np.float64).reshape(-1)
        self.ma = np.asarray(self.ma, dtype=np.float64).reshape(-1)
        self.residual_history = np.asarray(self.residual_history, dtype=np.float64).reshape(-1)

    @property
    def order(self) -> Tuple[int, int, int]:
        return (self.p, self.d, self.q)

    @property
    def aic(self) -> float:
        return aic(self.sse, self.n_obs, self.p, self.q)

    @property
    def min_history(self) -> int:
        return self.p + 1

    def predict_next(self, history: np.ndarray) -> float:
        return arima_predict(self, history)

    def is_stationary(self) -> bool:
        """True when all AR polynomial roots lie outside the unit circle."""
        if self.p == 0:
            return True
        roots = np.roots(np.r_[-self.ar[::-1], 1.0])
        return bool(np.all(np.abs(roots) > 1.0))


def aic(sse: float, n: int, p: int, q: int) -> float:
    """n * ln(SSE / n) + 2 * (p + q + 1)."""
    return n * math.log(max(sse, 1e-300) / n) + 2 * (p + q + 1)


def _ar_least_squares(diff: np.ndarray, p: int, burn_in: int) -> np.ndarray:
    """[mu, ar_1..ar_p] minimising the squared innovations of a pure AR model."""
    rows = diff.shape[0] - burn_in
    design = np.ones((rows, p + 1))
    for i in range(1, p + 1):
        design[:, i] = diff[burn_in - i : diff.shape[0] - i]
    coef, *_ = np.linalg.lstsq(design, diff[burn_in:], rcond=None)
    return coef


def arima_fit(
    values: np.ndarray,
    p: int,
    q: int,
    max_iter: int = 500,
    burn_in: Optional[int] = None,
) -> ArimaModel:
    """
    Fit ARIMA(p, 1, q) by conditional sum of squares.

    Args:
        values: Undifferenced observations
        p: AR order
        q: MA order
        max_iter: Optimizer iteration limit (MA orders only)
        burn_in: Differenced points excluded from the objective; defaults
            to p. A common value makes AIC comparable across orders.

    Raises:
        InsufficientHistoryError: len(values) <= p + q + 2
        ModelFitError: The optimizer hit its iteration limit or produced
            non-finite parameters
    """
    values = np.asarray(values, dtype=np.float64).reshape(-1)
    if values.shape[0] <= p + q + 2:
        raise InsufficientHistoryError(p + q + 3, values.shape[0], what=f"ARIMA({p},1,{q})")
    diff = np.diff(values)
    burn = p if burn_in is None else max(burn_in, p)
    if diff.shape[0] - burn < 1:
        raise InsufficientHistoryError(burn + 2, values.shape[0], what=f"ARIMA({p},1,{q})")

    start = _ar_least_squares(diff, p, burn)
    if q == 0:
        params = start
    else:
        n_eff = diff.shape[0] - burn

        def objective(theta: np.ndarray) -> float:
            eps = innovations(diff, theta[0], theta[1 : p + 1], theta[p + 1 :])
            value = float(np.dot(eps[burn:], eps[burn:]) / n_eff)
            return value if math.isfinite(value) else PENALTY

        bound = COEFFICIENT_BOUND
        x0 = np.r_[start[0], np.clip(start[1:], -bound, bound), np.zeros(q)]
        bounds = [(None, None)] + [(-bound, bound)] * (p + q)
        result = optimize.minimize(
            objective,
            x0,
            method="L-BFGS-B",
            bounds=bounds,
            options={"maxiter": max_iter},
        )
        if result.status == 1:
            raise ModelFitError(
                "arima",
                f"ARIMA({p},1,{q}) did not converge: {result.message}",
                iterations=int(result.nit),
            )
        if not result.success:
            logger.warning(
                "ARIMA({},1,{}) optimizer stopped early after {} iterations: {}",
                p,
                q,
                result.nit,
                result.message,
            )
        params = result.x

    if not np.all(np.isfinite(params)):
        raise ModelFitError("arima", f"ARIMA({p},1,{q}) produced non-finite parameters")

    intercept, ar, ma = float(params[0]), params[1 : p + 1], params[p + 1 :]
    eps = innovations(diff, intercept, ar, ma)
    model = ArimaModel(
        p=p,
        q=q,
        intercept=intercept,
        ar=ar,
        ma=ma,
        residual_history=eps[eps.shape[0] - q :] if q else np.zeros(0),
        sse=float(np.dot(eps[burn:], eps[burn:])),
        n_obs=int(diff.shape[0] - burn),
    )
    if not model.is_stationary():
        logger.warning("ARIMA({},1,{}) AR polynomial has roots on or inside the unit circle", p, q)
    return model


def arima_select_fit(
    values: np.ndarray, p_max: int, q_max: int, max_iter: int = 500
) -> ArimaModel:
    """
    Fit every order in [0, p_max] x [0, q_max] and keep the lowest AIC.

    All candidates share a burn-in of p_max differenced points. Ties go to
    the smaller p + q, then the smaller p.

    Raises:
        ModelFitError: No candidate could be fitted
    """
    candidates: List[ArimaModel] = []
    for p, q in product(range(p_max + 1), range(q_max + 1)):
        try:
            model = arima_fit(values, p, q, max_iter=max_iter, burn_in=p_max)
        except (ModelFitError, InsufficientHistoryError) as exc:
            logger.debug("Skipping ARIMA({},1,{}): {}", p, q, exc)
            continue
        logger.debug("ARIMA({},1,{}) aic={:.4f}", p, q, model.aic)
        candidates.append(model)

    if not candidates:
        raise ModelFitError("arima", f"no order in p<={p_max}, q<={q_max} could be fitted")
    best = min(candidates, key=lambda m: (m.aic, m.p + m.q, m.p))
    logger.info("Selected ARIMA({},1,{}) with aic={:.4f}", best.p, best.q, best.aic)
    return best


def arima_select(
    values: np.ndarray, p_max: int, q_max: int, max_iter: int = 500
) -> Tuple[int, int]:
    """Order (p, q) with the lowest AIC over the grid."""
    best = arima_select_fit(values, p_max, q_max, max_iter=max_iter)
    return best.p, best.q


def arima_predict(model: ArimaModel, history: np.ndarray) -> float:
    """
    One-step forecast: last value + mu + sum ar_i * dx + sum ma_j * e.

    Innovations are recomputed over the supplied history with the fitted
    parameters, so the forecast never depends on values it was not given.

    Raises:
        InsufficientHistoryError: len(history) < p + 1
    """
    history = np.asarray(history, dtype=np.float64).reshape(-1)
    if history.shape[0] < model.min_history:
        raise InsufficientHistoryError(model.min_history, history.shape[0], what="ARIMA history")
    diff = np.diff(history)
    step = model.intercept
    if model.p:
        recent = diff[::-1][: model.p]
        step += float(np.dot(model.ar[: recent.shape[0]], recent))
    if model.q and diff.shape[0]:
        eps = innovations(diff, model.intercept, model.ar, model.ma)[::-1][: model.q]
        step += float(np.dot(model.ma[: eps.shape[0]], eps))
    return float(history[-1] + step)
