"""
Evaluation Entities - Peaks, metric reports, fold plans and experiment config.

Pure Python dataclasses; JSON schemas for these live in the persistence layer.
"""

import math
from dataclasses import asdict, dataclass, field, replace
from datetime import timedelta
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from ppfd.domain.exceptions import ValidationError

HOURLY_WINDOW = 24
DAILY_WINDOW = 7


class ModelKind(str, Enum):
    """Forecasting models an experiment can evaluate."""

    ANN = "ann"
    ARIMA = "arima"
    FOURIER = "fourier"
    PPFD_ANN = "ppfd-ann"
    PPFD_ARIMA = "ppfd-arima"

    @property
    def is_ppfd(self) -> bool:
        return self in (ModelKind.PPFD_ANN, ModelKind.PPFD_ARIMA)

    @property
    def base(self) -> Optional[str]:
        """Residual model family ('ann' or 'arima'), None for FOURIER."""
        if self in (ModelKind.ANN, ModelKind.PPFD_ANN):
            return "ann"
        if self in (ModelKind.ARIMA, ModelKind.PPFD_ARIMA):
            return "arima"
        return None

    @property
    def display_name(self) -> str:
        return {
            ModelKind.ANN: "ANN",
            ModelKind.ARIMA: "ARIMA",
            ModelKind.FOURIER: "FOURIER",
            ModelKind.PPFD_ANN: "PPFD with ANN",
            ModelKind.PPFD_ARIMA: "PPFD with ARIMA",
        }[self]


@dataclass(frozen=True)
class PeakSet:
    """Sorted indices of local maxima; endpoints are never peaks."""

    indices: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))
        if any(b <= a for a, b in zip(self.indices, self.indices[1:])):
            raise ValidationError("indices", "peak indices must be strictly increasing")

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.indices, dtype=np.int64)


@dataclass(frozen=True)
class MetricReport:
    """Errors of one forecast against observed values (all + peaks only)."""

    rmse: float
    rwse: float
    peak_rmse: float
    peak_rwse: float
    under_predicted: int
    over_predicted: int
    n_total: int
    n_peaks: int
    alpha: float

    def __post_init__(self):
        if self.under_predicted + self.over_predicted != self.n_peaks:
            raise ValidationError("n_peaks", "under + over must equal the peak count")
        if not 0.0 <= self.alpha <= 1.0:
            raise ValidationError("alpha", f"must lie in [0, 1], got {self.alpha}")

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Fold:
    """Half-open index ranges of one forward-chaining round."""

    train: Tuple[int, int]
    validate: Tuple[int, int]

    @property
    def train_length(self) -> int:
        return self.train[1] - self.train[0]

    @property
    def validate_length(self) -> int:
        return self.validate[1] - self.validate[0]


@dataclass(frozen=True)
class FoldPlan:
    folds: Tuple[Fold, ...]

    @property
    def k(self) -> int:
        return len(self.folds)

    def __iter__(self):
        return iter(self.folds)

    def __len__(self) -> int:
        return len(self.folds)


@dataclass
class AnnConfig:
    """Training hyperparameters of the shallow network (hidden width is fixed at 5)."""

    learning_rate: float = 0.05
    epochs: int = 2000
    init_scale: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if self.learning_rate <= 0:
            raise ValidationError("learning_rate", "must be positive")
        if self.epochs < 0:
            raise ValidationError("epochs", "must be >= 0")
        if self.init_scale <= 0:
            raise ValidationError("init_scale", "must be positive")


@dataclass
class ArimaConfig:
    """Order grid for ARIMA(p, 1, q); a fixed order skips the AIC search."""

    p_max: int = 5
    q_max: int = 5
    order: Optional[Tuple[int, int]] = None
    max_iter: int = 500

    def __post_init__(self):
        if self.p_max < 0 or self.q_max < 0:
            raise ValidationError("p_max/q_max", "grid bounds must be >= 0")
        if self.order is not None:
            p, q = self.order
            if p < 0 or q < 0:
                raise ValidationError("order", f"orders must be >= 0, got {self.order}")
            self.order = (int(p), int(q))


@dataclass
class ExperimentConfig:
    """
    Everything needed to rerun one row of a comparison table.

    c is only meaningful for PPFD kinds; FOURIER reports ceil(N/2) in its
    echoed configuration instead. A window of None is resolved from the
    sampling step of the series (see resolved_window). detrend applies to
    PPFD seasonal extraction only.
    """

    model: ModelKind = ModelKind.PPFD_ANN
    c: Optional[int] = None
    window: Optional[int] = None
    alpha: float = 0.2
    folds: int = 5
    seed: int = 0
    ann: AnnConfig = field(default_factory=AnnConfig)
    arima: ArimaConfig = field(default_factory=ArimaConfig)
    workers: int = 1
    detrend: bool = True

    def __post_init__(self):
        if isinstance(self.model, str):
            self.model = ModelKind(self.model)
        if self.model.is_ppfd:
            if self.c is None or self.c < 1:
                raise ValidationError("c", f"PPFD models need c >= 1, got {self.c}")
        if self.window is not None and self.window < 1:
            raise ValidationError("window", "must be >= 1")
        if self.folds < 1:
            raise ValidationError("folds", "must be >= 1")
        if not 0.0 <= self.alpha <= 1.0 or math.isnan(self.alpha):
            raise ValidationError("alpha", f"must lie in [0, 1], got {self.alpha}")
        if self.workers < 1:
            raise ValidationError("workers", "must be >= 1")

    def resolved_window(self, step: timedelta) -> int:
        """The explicit window, else 24 for steps up to an hour and 7 otherwise."""
        if self.window is not None:
            return self.window
        return HOURLY_WINDOW if step <= timedelta(hours=1) else DAILY_WINDOW

    def for_step(self, step: timedelta) -> "ExperimentConfig":
        """Copy with the window resolved for this sampling step."""
        return replace(self, window=self.resolved_window(step))

    def to_dict(self) -> dict:
        data = asdict(self)
        data["model"] = self.model.value
        if self.arima.order is not None:
            data["arima"]["order"] = list(self.arima.order)
        return data


@dataclass(frozen=True)
class EvaluationReport:
    """Per-fold reports plus their aggregate (mean errors, summed counts)."""

    per_fold: Tuple[MetricReport, ...]
    averaged: MetricReport

    @property
    def folds(self) -> int:
        return len(self.per_fold)

    def to_dict(self) -> dict:
        return {
            "folds": [r.to_dict() for r in self.per_fold],
            "averaged": self.averaged.to_dict(),
        }


@dataclass(frozen=True)
class SeriesSummary:
    """Descriptive statistics in the layout of a data-set statistics table."""

    n: int
    mean: float
    min: float
    median: float
    max: float

    def to_dict(self) -> dict:
        return asdict(self)

    def format_row(self, name: str) -> str:
        return (
            f"{name} | {self.n} | {self.mean:.1f} | {self.min:.1f} | "
            f"{self.median:.1f} | {self.max:.1f}"
        )



@dataclass(frozen=True)
class RunManifest:
    """Provenance of one report: what ran, on which input, writing where."""

    tool_version: str
    input_path: Optional[str]
    input_sha256: Optional[str]
    config_hash: str
    outputs: Tuple[str, ...] = ()

    def to_dict(self) -> dict:
        data = asdict(self)
        data["outputs"] = list(self.outputs)
        return data


@dataclass(frozen=True)
class ExperimentResult:
    """
    A finished experiment as stored in a JSON report.

    config is the echoed configuration, with c resolved to the value that
    was actually used (ceil(N/2) for the Fourier baseline).
    """

    config: dict
    report: EvaluationReport
    manifest: RunManifest
    runtime_seconds: float

    @property
    def model(self) -> ModelKind:
        return ModelKind(self.config["model"])

    @property
    def c(self) -> Optional[int]:
        return self.config.get("c")

    @property
    def alpha(self) -> float:
        return float(self.config["alpha"])
