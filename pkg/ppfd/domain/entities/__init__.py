"""
Domain Entities

Plain dataclasses validated in __post_init__. No pydantic or I/O here;
document schemas live in the persistence layer.
"""

from ppfd.domain.entities.evaluation import (
    AnnConfig,
    ArimaConfig,
    EvaluationReport,
    ExperimentConfig,
    Fold,
    FoldPlan,
    MetricReport,
    ModelKind,
    PeakSet,
    SeriesSummary,
)
from ppfd.domain.entities.scaling import ScalingState
from ppfd.domain.entities.series import EPOCH, GapReport, TimeSeries
from ppfd.domain.entities.spectrum import Sinusoid, Spectrum
from ppfd.domain.entities.synth import SeasonalComponent, SynthSpec

__all__ = [
    "EPOCH",
    "TimeSeries",
    "GapReport",
    "Spectrum",
    "Sinusoid",
    "ScalingState",
    "ModelKind",
    "PeakSet",
    "MetricReport",
    "Fold",
    "FoldPlan",
    "AnnConfig",
    "ArimaConfig",
    "ExperimentConfig",
    "EvaluationReport",
    "SeriesSummary",
    "SeasonalComponent",
    "SynthSpec",
]
