"""
File Repository Implementations

Concrete implementations of the repository interfaces on the local file
system: pandas for CSV, pydantic for JSON documents.
"""

import hashlib
import json
from datetime import datetime, timedelta
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import pandas as pd
from pydantic import ValidationError as SchemaValidationError

from ppfd.application.interfaces.forecasters import FittedModel
from ppfd.application.interfaces.repositories import (
    ModelRepository,
    ReportRepository,
    SeriesRepository,
    TableWriter,
)
from ppfd.domain.entities.evaluation import ExperimentResult
from ppfd.domain.entities.series import EPOCH, GapReport, TimeSeries
from ppfd.domain.exceptions import DataSourceError, ReportSchemaError, ValidationError
from ppfd.domain.services.preprocessing import from_samples
from ppfd.infrastructure.persistence.mappers import (
    document_to_fitted,
    document_to_result,
    fitted_to_document,
    result_to_document,
)
from ppfd.infrastructure.persistence.schemas import (
    MODEL_SCHEMA_VERSION,
    REPORT_SCHEMA_VERSION,
    ModelDocument,
    ReportDocument,
)

SERIES_COLUMNS = ("timestamp", "value")


def _write_text(path: str, text: str) -> str:
    try:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise DataSourceError(path, f"cannot write: {exc.strerror or exc}") from exc
    return str(target)


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except FileNotFoundError as exc:
        raise DataSourceError(path, "file not found") from exc
    except (OSError, UnicodeDecodeError) as exc:
        raise DataSourceError(path, f"cannot read: {exc}") from exc


def _read_json(path: str) -> dict:
    try:
        data = json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise DataSourceError(path, f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise DataSourceError(path, "expected a JSON object")
    return data


def infer_step(timestamps: Sequence[datetime]) -> timedelta:
    """Smallest positive spacing between consecutive timestamps (1 day if none)."""
    spacings = [b - a for a, b in zip(timestamps, timestamps[1:]) if b > a]
    return min(spacings) if spacings else timedelta(days=1)


class CsvSeriesRepository(SeriesRepository):
    """
    Series stored as UTF-8 CSV with header timestamp,value.

    Timestamps are ISO-8601 instants or non-negative integer indices; integer
    index k maps to 1970-01-01 + k * step.
    """

    def load(
        self, path: str, step: Optional[timedelta] = None
    ) -> Tuple[TimeSeries, GapReport]:
        try:
            frame = pd.read_csv(path, dtype={"timestamp": str}, encoding="utf-8")
        except FileNotFoundError as exc:
            raise DataSourceError(path, "file not found") from exc
        except (pd.errors.ParserError, pd.errors.EmptyDataError) as exc:
            raise DataSourceError(path, f"malformed CSV: {exc}") from exc
        except (OSError, UnicodeDecodeError) as exc:
            raise DataSourceError(path, f"cannot read: {exc}") from exc

        if list(frame.columns[:2]) != list(SERIES_COLUMNS):
            raise DataSourceError(
                path, f"expected header 'timestamp,value', got {','.join(map(str, frame.columns))}"
            )

        if frame.empty:
            raise DataSourceError(path, "no data rows")

        values = pd.to_numeric(frame["value"], errors="coerce")
        if values.isna().any():
            row = int(values.isna().to_numpy().argmax())
            raise DataSourceError(path, f"non-numeric value on line {row + 2}")

        raw = frame["timestamp"].astype(str).str.strip()
        if raw.str.fullmatch(r"\d+").all():
            if step is None:
                raise ValidationError("step", "integer timestamps need an explicit step")
            timestamps = [EPOCH + int(k) * step for k in raw]
        else:
            try:
                parsed = pd.to_datetime(raw, format="ISO8601", utc=True)
            except (ValueError, TypeError) as exc:
                raise DataSourceError(path, f"unparseable timestamp: {exc}") from exc
            timestamps = [ts.to_pydatetime() for ts in parsed.dt.tz_convert(None)]
            if step is None:
                step = infer_step(timestamps)

        return from_samples(timestamps, values.tolist(), step)

    def save(self, path: str, series: TimeSeries) -> str:
        frame = pd.DataFrame(
            {
                "timestamp": [ts.isoformat() for ts in series.timestamps()],
                "value": series.values,
            }
        )
        return _write_text(path, frame.to_csv(index=False))

    def sha256(self, path: str) -> str:
        try:
            return hashlib.sha256(Path(path).read_bytes()).hexdigest()
        except OSError as exc:
            raise DataSourceError(path, f"cannot read: {exc.strerror or exc}") from exc


class JsonReportRepository(ReportRepository):
    """Experiment reports as indented JSON (ReportDocument)."""

    def save(self, path: str, result: ExperimentResult) -> str:
        document = result_to_document(result)
        return _write_text(path, document.model_dump_json(indent=2) + "\n")

    def load(self, path: str) -> ExperimentResult:
        data = _read_json(path)
        version = data.get("schema_version")
        if version != REPORT_SCHEMA_VERSION:
            raise ReportSchemaError(path, version, REPORT_SCHEMA_VERSION)
        try:
            document = ReportDocument.model_validate(data)
        except SchemaValidationError as exc:
            raise DataSourceError(path, f"invalid report: {exc}") from exc
        return document_to_result(document)


class JsonModelRepository(ModelRepository):
    """Fitted models as indented JSON (ModelDocument)."""

    def save(self, path: str, fitted: FittedModel) -> str:
        document = fitted_to_document(fitted)
        return _write_text(path, document.model_dump_json(indent=2) + "\n")

    def load(self, path: str) -> FittedModel:
        data = _read_json(path)
        version = data.get("schema_version")
        if version != MODEL_SCHEMA_VERSION:
            raise ReportSchemaError(path, version, MODEL_SCHEMA_VERSION)
        try:
            document = ModelDocument.model_validate(data)
        except SchemaValidationError as exc:
            raise DataSourceError(path, f"invalid model document: {exc}") from exc
        return document_to_fitted(document)


class PandasTableWriter(TableWriter):
    """CSV files and aligned text tables via pandas DataFrames."""

    @staticmethod
    def _frame(columns: Sequence[str], rows: List[dict]) -> pd.DataFrame:
        return pd.DataFrame(rows, columns=list(columns))

    def write(self, path: str, columns: Sequence[str], rows: List[dict]) -> str:
        return _write_text(path, self._frame(columns, rows).to_csv(index=False))

    def render(self, columns: Sequence[str], rows: List[dict], fmt: str = "text") -> str:
        frame = self._frame(columns, rows)
        if fmt == "csv":
            return frame.to_csv(index=False)
        return frame.to_string(index=False) + "\n"
