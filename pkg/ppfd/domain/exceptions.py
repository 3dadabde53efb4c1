"""
Domain Exceptions

Custom exceptions for domain-specific errors.
These exceptions are framework-agnostic and represent violated preconditions
of the forecasting pipeline (bad grids, degenerate series, failed fits).
"""

from typing import Optional


class DomainError(Exception):
    """Base exception for all domain errors."""

    pass


class ValidationError(DomainError):
    """Raised when validation fails."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"Validation error on {field}: {message}")


class SeriesGridError(DomainError):
    """Raised when sample timestamps do not fit a uniform grid."""

    def __init__(self, timestamp: object, reason: str):
        self.timestamp = timestamp
        self.reason = reason
        super().__init__(f"{reason}: {timestamp}")


class GapError(DomainError):
    """Raised when gaps cannot be filled or a series with gaps is used."""

    pass


class EmptySeriesError(DomainError):
    """Raised when an operation would produce or consume an empty series."""

    pass


class ComponentRangeError(DomainError):
    """Raised when a component count or DFT bin is out of range."""

    def __init__(self, value: int, low: int, high: int, what: str = "c"):
        self.value = value
        self.low = low
        self.high = high
        super().__init__(f"{what}={value} out of range [{low}, {high}]")


class SpectrumError(DomainError):
    """Raised when a spectrum is malformed (wrong length, not conjugate symmetric)."""

    pass


class ScalingError(DomainError):
    """Raised when the scaling pipeline cannot be fitted or inverted."""

    pass


class InsufficientHistoryError(DomainError):
    """Raised when a model is asked to forecast from too few observations."""

    def __init__(self, required: int, available: int, what: str = "history"):
        self.required = required
        self.available = available
        super().__init__(
            f"{what} needs at least {required} observations, got {available}"
        )


class ModelFitError(DomainError):
    """Raised when a forecasting model fails to train."""

    def __init__(self, model: str, message: str, iterations: Optional[int] = None):
        self.model = model
        self.iterations = iterations
        msg = f"{model} fit failed: {message}"
        if iterations is not None:
            msg += f" (after {iterations} iterations)"
        super().__init__(msg)


class FoldPlanError(DomainError):
    """Raised when a series is too short for the requested fold count."""

    def __init__(self, n: int, k: int, minimum: int):
        self.n = n
        self.k = k
        self.minimum = minimum
        super().__init__(
            f"series of length {n} too short for {k} folds; need at least {minimum}"
        )


class ExperimentError(DomainError):
    """Raised when a fold of an experiment fails."""

    def __init__(self, fold_index: int, cause: Exception):
        self.fold_index = fold_index
        self.cause = cause
        super().__init__(f"fold {fold_index} failed: {cause}")


class ReportSchemaError(DomainError):
    """Raised when a stored document has an unsupported schema version."""

    def __init__(self, path: str, found: object, expected: object):
        self.path = path
        self.found = found
        self.expected = expected
        super().__init__(
            f"{path}: schema version {found} not supported (expected {expected})"
        )


class DataSourceError(DomainError):
    """Raised when an input or output file cannot be read or written."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")
