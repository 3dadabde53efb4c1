"""
Entity <-> Document Mappers

Functions to convert between domain entities / fitted models and the
pydantic document schemas. This keeps the domain layer free of pydantic.
"""

from datetime import datetime, timedelta
from typing import Optional

from ppfd.application.interfaces.forecasters import FittedModel, ForecastModel
from ppfd.domain.entities.evaluation import (
    AnnConfig,
    ArimaConfig,
    EvaluationReport,
    ExperimentConfig,
    ExperimentResult,
    MetricReport,
    ModelKind,
    RunManifest,
)
from ppfd.domain.entities.scaling import ScalingState
from ppfd.domain.entities.spectrum import Sinusoid
from ppfd.domain.exceptions import ValidationError
from ppfd.infrastructure.forecasters.ann import AnnModel
from ppfd.infrastructure.forecasters.arima import ArimaModel
from ppfd.infrastructure.forecasters.fourier import FourierModel
from ppfd.infrastructure.forecasters.ppfd import NormalizedModel, PpfdModel
from ppfd.infrastructure.persistence.schemas import (
    AnnSchema,
    ArimaSchema,
    FourierSchema,
    ManifestSchema,
    MetricReportSchema,
    ModelDocument,
    NormalizedSchema,
    PpfdSchema,
    ReportDocument,
    ScalingSchema,
    SinusoidSchema,
)

# ============================================================
# Report Mappers
# ============================================================


def metric_report_to_schema(report: MetricReport) -> MetricReportSchema:
    return MetricReportSchema(**report.to_dict())


def schema_to_metric_report(schema: MetricReportSchema) -> MetricReport:
    return MetricReport(**schema.model_dump())


def result_to_document(result: ExperimentResult) -> ReportDocument:
    """Convert a finished experiment to its JSON report document."""
    return ReportDocument(
        config=result.config,
        folds=[metric_report_to_schema(r) for r in result.report.per_fold],
        averaged=metric_report_to_schema(result.report.averaged),
        manifest=ManifestSchema(**result.manifest.to_dict()),
        runtime_seconds=result.runtime_seconds,
    )


def document_to_result(document: ReportDocument) -> ExperimentResult:
    manifest = document.manifest
    return ExperimentResult(
        config=document.config,
        report=EvaluationReport(
            per_fold=tuple(schema_to_metric_report(f) for f in document.folds),
            averaged=schema_to_metric_report(document.averaged),
        ),
        manifest=RunManifest(
            tool_version=manifest.tool_version,
            input_path=manifest.input_path,
            input_sha256=manifest.input_sha256,
            config_hash=manifest.config_hash,
            outputs=tuple(manifest.outputs),
        ),
        runtime_seconds=document.runtime_seconds,
    )


def config_from_dict(data: dict) -> ExperimentConfig:
    """Rebuild an ExperimentConfig from ExperimentConfig.to_dict() output."""
    arima = dict(data.get("arima") or {})
    if arima.get("order") is not None:
        arima["order"] = tuple(arima["order"])
    return ExperimentConfig(
        model=ModelKind(data["model"]),
        c=data.get("c"),
        window=data.get("window"),
        alpha=data.get("alpha", 0.2),
        folds=data.get("folds", 5),
        seed=data.get("seed", 0),
        ann=AnnConfig(**(data.get("ann") or {})),
        arima=ArimaConfig(**arima),
        workers=data.get("workers", 1),
        detrend=data.get("detrend", True),
    )


# ============================================================
# Model Mappers
# ============================================================


def sinusoid_to_schema(s: Sinusoid) -> SinusoidSchema:
    return SinusoidSchema(bin=s.bin, n=s.n, amplitude=s.amplitude, phase=s.phase)


def schema_to_sinusoid(schema: SinusoidSchema) -> Sinusoid:
    return Sinusoid(bin=schema.bin, n=schema.n, amplitude=schema.amplitude, phase=schema.phase)


def _ann_to_schema(model: AnnModel) -> AnnSchema:
    return AnnSchema(
        window_size=model.window_size,
        theta=model.theta.tolist(),
        learning_rate=model.config.learning_rate,
        epochs=model.config.epochs,
        init_scale=model.config.init_scale,
        seed=model.config.seed,
        final_loss=model.final_loss,
    )


def _arima_to_schema(model: ArimaModel) -> ArimaSchema:
    return ArimaSchema(
        p=model.p,
        q=model.q,
        intercept=model.intercept,
        ar=model.ar.tolist(),
        ma=model.ma.tolist(),
        residual_history=model.residual_history.tolist(),
        sse=model.sse,
        n_obs=model.n_obs,
    )


def normalized_to_schema(model: NormalizedModel) -> NormalizedSchema:
    scaling = ScalingSchema(**model.scaling.to_dict())
    if isinstance(model.base, AnnModel):
        return NormalizedSchema(base_kind="ann", scaling=scaling, ann=_ann_to_schema(model.base))
    if isinstance(model.base, ArimaModel):
        return NormalizedSchema(
            base_kind="arima", scaling=scaling, arima=_arima_to_schema(model.base)
        )
    raise ValidationError("model", f"cannot serialize base {type(model.base).__name__}")


def schema_to_normalized(schema: NormalizedSchema) -> NormalizedModel:
    base: ForecastModel
    if schema.base_kind == "ann":
        ann = schema.ann
        base = AnnModel(
            window_size=ann.window_size,
            theta=ann.theta,
            config=AnnConfig(
                learning_rate=ann.learning_rate,
                epochs=ann.epochs,
                init_scale=ann.init_scale,
                seed=ann.seed,
            ),
            final_loss=ann.final_loss,
        )
    else:
        arima = schema.arima
        base = ArimaModel(
            p=arima.p,
            q=arima.q,
            intercept=arima.intercept,
            ar=arima.ar,
            ma=arima.ma,
            residual_history=arima.residual_history,
            sse=arima.sse,
            n_obs=arima.n_obs,
        )
    return NormalizedModel(base=base, scaling=ScalingState(**schema.scaling.model_dump()))


def fitted_to_document(fitted: FittedModel) -> ModelDocument:
    """Convert a fitted model to its JSON document."""
    model = fitted.model
    normalized: Optional[NormalizedSchema] = None
    fourier: Optional[FourierSchema] = None
    ppfd: Optional[PpfdSchema] = None

    if isinstance(model, PpfdModel):
        ppfd = PpfdSchema(
            sinusoids=[sinusoid_to_schema(s) for s in model.sinusoids],
            residual_model=normalized_to_schema(model.residual_model),
            training_length=model.training_length,
        )
    elif isinstance(model, FourierModel):
        fourier = FourierSchema(
            mean=model.mean,
            sinusoids=[sinusoid_to_schema(s) for s in model.sinusoids],
            training_length=model.training_length,
        )
    elif isinstance(model, NormalizedModel):
        normalized = normalized_to_schema(model)
    else:
        raise ValidationError("model", f"cannot serialize {type(model).__name__}")

    return ModelDocument(
        kind=fitted.kind.value,
        training_length=fitted.training_length,
        origin=fitted.origin.isoformat(),
        step_seconds=fitted.step.total_seconds(),
        config=fitted.config.to_dict(),
        normalized=normalized,
        fourier=fourier,
        ppfd=ppfd,
    )


def document_to_fitted(document: ModelDocument) -> FittedModel:
    model: ForecastModel
    if document.ppfd is not None and document.kind.startswith("ppfd"):
        model = PpfdModel(
            sinusoids=[schema_to_sinusoid(s) for s in document.ppfd.sinusoids],
            residual_model=schema_to_normalized(document.ppfd.residual_model),
            training_length=document.ppfd.training_length,
        )
    elif document.kind == "fourier":
        model = FourierModel(
            mean=document.fourier.mean,
            sinusoids=[schema_to_sinusoid(s) for s in document.fourier.sinusoids],
            training_length=document.fourier.training_length,
        )
    else:
        model = schema_to_normalized(document.normalized)

    return FittedModel(
        kind=ModelKind(document.kind),
        model=model,
        training_length=document.training_length,
        origin=datetime.fromisoformat(document.origin),
        step=timedelta(seconds=document.step_seconds),
        config=config_from_dict(document.config),
    )
