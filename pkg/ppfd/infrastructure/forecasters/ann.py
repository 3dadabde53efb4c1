"""
Shallow feed-forward network: w inputs, 5 sigmoid hidden units, 1 linear output.

Trained by full-batch gradient descent on mean squared error. All weights
live in one flat parameter vector so the gradient can be checked against
finite differences.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from loguru import logger
from scipy.special import expit

from ppfd.application.interfaces.forecasters import ForecastModel
from ppfd.domain.entities.evaluation import AnnConfig
from ppfd.domain.exceptions import (
    InsufficientHistoryError,
    ModelFitError,
    ValidationError,
)
from ppfd.infrastructure.forecasters.windows import WindowDataset

HIDDEN_UNITS = 5


def parameter_count(w: int) -> int:
    return w * HIDDEN_UNITS + HIDDEN_UNITS + HIDDEN_UNITS + 1


def unpack(theta: np.ndarray, w: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray, float]:
    """Split a flat vector into (W1 [w x 5], b1 [5], W2 [5], b2)."""
    h = HIDDEN_UNITS
    w1 = theta[: w * h].reshape(w, h)
    b1 = theta[w * h : w * h + h]
    w2 = theta[w * h + h : w * h + 2 * h]
    return w1, b1, w2, float(theta[-1])


def loss_and_gradient(
    theta: np.ndarray, inputs: np.ndarray, targets: np.ndarray
) -> Tuple[float, np.ndarray]:
    """Mean squared error and its gradient with respect to theta."""
    m, w = inputs.shape
    w1, b1, w2, b2 = unpack(theta, w)

    hidden = expit(inputs @ w1 + b1)
    error = hidden @ w2 + b2 - targets
    loss = float(np.mean(error**2))

    d_out = 2.0 * error / m
    d_hidden = np.outer(d_out, w2) * hidden * (1.0 - hidden)
    grad = np.concatenate(
        [
            (inputs.T @ d_hidden).ravel(),
            d_hidden.sum(axis=0),
            hidden.T @ d_out,
            [d_out.sum()],
        ]
    )
    return loss, grad


@dataclass(eq=False)
class AnnModel(ForecastModel):
    """Weights of a trained network plus the hyperparameters that produced them."""

    window_size: int
    theta: np.ndarray
    config: AnnConfig
    final_loss: Optional[float] = None

    def __post_init__(self):
        self.theta = np.asarray(self.theta, dtype=np.float64).reshape(-1)
        expected = parameter_count(self.window_size)
        if self.theta.shape[0] != expected:
            raise ValidationError(
                "theta", f"expected {expected} parameters, got {self.theta.shape[0]}"
            )

    @property
    def min_history(self) -> int:
        return self.window_size

    @property
    def lookback(self) -> int:
        return self.window_size

    @property
    def weights(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray, float]:
        return unpack(self.theta, self.window_size)

    def predict_batch(self, inputs: np.ndarray) -> np.ndarray:
        w1, b1, w2, b2 = self.weights
        return expit(inputs @ w1 + b1) @ w2 + b2

    def predict_window(self, window: np.ndarray) -> float:
        window = np.asarray(window, dtype=np.float64).reshape(-1)
        if window.shape[0] != self.window_size:
            raise ValidationError(
                "window", f"expected {self.window_size} values, got {window.shape[0]}"
            )
        return float(self.predict_batch(window[np.newaxis, :])[0])

    def predict_next(self, history: np.ndarray) -> float:
        if len(history) < self.window_size:
            raise InsufficientHistoryError(self.window_size, len(history), what="ANN window")
        return self.predict_window(history[-self.window_size :])


def initial_parameters(w: int, config: AnnConfig) -> np.ndarray:
    rng = np.random.default_rng(config.seed)
    return rng.uniform(-config.init_scale, config.init_scale, size=parameter_count(w))


def ann_fit(data: WindowDataset, config: AnnConfig) -> AnnModel:
    """
    Train by full-batch gradient descent from a seeded uniform initialisation.

    Args:
        data: Supervised windows (inputs roughly within [-1, 1])
        config: Learning rate, epochs, init scale and seed

    Returns:
        Trained AnnModel; with zero epochs the initial weights

    Raises:
        ModelFitError: Loss or gradient became non-finite
    """
    if len(data) == 0:
        raise ValidationError("data", "cannot train on an empty dataset")
    theta = initial_parameters(data.window_size, config)
    loss = None
    for epoch in range(config.epochs):
        loss, grad = loss_and_gradient(theta, data.inputs, data.targets)
        if not np.isfinite(loss) or not np.all(np.isfinite(grad)):
            raise ModelFitError("ann", f"non-finite loss ({loss}) at epoch {epoch}", iterations=epoch)
        theta = theta - config.learning_rate * grad
        if epoch % 500 == 0:
            logger.debug("ANN epoch {}: mse={:.6g}", epoch, loss)

    if config.epochs:
        loss, _ = loss_and_gradient(theta, data.inputs, data.targets)
        if not np.isfinite(loss):
            raise ModelFitError("ann", "non-finite loss after training", iterations=config.epochs)
        logger.debug("ANN trained for {} epochs: mse={:.6g}", config.epochs, loss)
    return AnnModel(window_size=data.window_size, theta=theta, config=config, final_loss=loss)
