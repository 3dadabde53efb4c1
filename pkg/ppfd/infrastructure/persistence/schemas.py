"""
Document Schemas

Pydantic models for the JSON files the tool reads and writes: experiment
reports and fitted model documents. Domain entities stay plain dataclasses;
mappers.py converts between the two.
"""

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, NonNegativeInt, model_validator

REPORT_SCHEMA_VERSION = 1
MODEL_SCHEMA_VERSION = 1


class MetricReportSchema(BaseModel):
    """Errors of one fold (or their average)."""

    rmse: float = Field(ge=0)
    rwse: float = Field(ge=0)
    peak_rmse: float = Field(ge=0)
    peak_rwse: float = Field(ge=0)
    under_predicted: NonNegativeInt
    over_predicted: NonNegativeInt
    n_total: NonNegativeInt
    n_peaks: NonNegativeInt
    alpha: float = Field(ge=0, le=1)

    @model_validator(mode="after")
    def counts_add_up(self) -> "MetricReportSchema":
        if self.under_predicted + self.over_predicted != self.n_peaks:
            raise ValueError("under_predicted + over_predicted must equal n_peaks")
        return self


class ManifestSchema(BaseModel):
    tool_version: str
    input_path: Optional[str] = None
    input_sha256: Optional[str] = None
    config_hash: str
    outputs: List[str] = Field(default_factory=list)


class ReportDocument(BaseModel):
    """Experiment report: echoed config, per-fold and averaged metrics, manifest."""

    schema_version: int = REPORT_SCHEMA_VERSION
    config: Dict[str, Any]
    folds: List[MetricReportSchema]
    averaged: MetricReportSchema
    manifest: ManifestSchema
    runtime_seconds: float = Field(ge=0)


class SinusoidSchema(BaseModel):
    bin: NonNegativeInt
    n: int = Field(ge=2)
    amplitude: float = Field(ge=0)
    phase: float


class ScalingSchema(BaseModel):
    x_min: float
    x_max: float
    l_max_abs: float = Field(gt=0)
    s_prev: float


class AnnSchema(BaseModel):
    window_size: int = Field(ge=1)
    theta: List[float]
    learning_rate: float
    epochs: NonNegativeInt
    init_scale: float
    seed: int
    final_loss: Optional[float] = None


class ArimaSchema(BaseModel):
    p: NonNegativeInt
    q: NonNegativeInt
    d: Literal[1] = 1
    intercept: float
    ar: List[float]
    ma: List[float]
    residual_history: List[float] = Field(default_factory=list)
    sse: float = 0.0
    n_obs: NonNegativeInt = 0

    @model_validator(mode="after")
    def orders_match(self) -> "ArimaSchema":
        if len(self.ar) != self.p or len(self.ma) != self.q:
            raise ValueError("coefficient counts must match p and q")
        return self


class NormalizedSchema(BaseModel):
    """A base model fitted on scaled data plus its scaling constants."""

    base_kind: Literal["ann", "arima"]
    scaling: ScalingSchema
    ann: Optional[AnnSchema] = None
    arima: Optional[ArimaSchema] = None

    @model_validator(mode="after")
    def base_present(self) -> "NormalizedSchema":
        if getattr(self, self.base_kind) is None:
            raise ValueError(f"base_kind is {self.base_kind!r} but no such model is stored")
        return self


class FourierSchema(BaseModel):
    mean: float
    sinusoids: List[SinusoidSchema]
    training_length: NonNegativeInt


class PpfdSchema(BaseModel):
    sinusoids: List[SinusoidSchema] = Field(min_length=1)
    residual_model: NormalizedSchema
    training_length: NonNegativeInt


class ModelDocument(BaseModel):
    """A fitted model with the grid and configuration it was trained with."""

    schema_version: int = MODEL_SCHEMA_VERSION
    kind: Literal["ann", "arima", "fourier", "ppfd-ann", "ppfd-arima"]
    training_length: int = Field(ge=1)
    origin: str
    step_seconds: float = Field(gt=0)
    config: Dict[str, Any]
    normalized: Optional[NormalizedSchema] = None
    fourier: Optional[FourierSchema] = None
    ppfd: Optional[PpfdSchema] = None

    @model_validator(mode="after")
    def payload_matches_kind(self) -> "ModelDocument":
        expected = {
            "ann": "normalized",
            "arima": "normalized",
            "fourier": "fourier",
            "ppfd-ann": "ppfd",
            "ppfd-arima": "ppfd",
        }[self.kind]
        if getattr(self, expected) is None:
            raise ValueError(f"{self.kind} model document needs a {expected!r} payload")
        return self
