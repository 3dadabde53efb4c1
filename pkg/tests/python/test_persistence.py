"""
Tests for the CSV, JSON and table repositories.
"""

import json
from datetime import datetime, timedelta

import numpy as np
import pytest

from ppfd.application.interfaces.forecasters import FittedModel
from ppfd.domain.entities.evaluation import (
    AnnConfig,
    ArimaConfig,
    ExperimentConfig,
    ModelKind,
)
from ppfd.domain.entities.series import EPOCH
from ppfd.domain.exceptions import DataSourceError, ReportSchemaError, ValidationError
from ppfd.infrastructure.forecasters.factory import DefaultForecasterFactory
from ppfd.infrastructure.persistence.repositories import (
    CsvSeriesRepository,
    JsonModelRepository,
    JsonReportRepository,
    PandasTableWriter,
    infer_step,
)


class TestCsvSeriesRepository:
    """Tests for CsvSeriesRepository."""

    def test_loads_fixture_with_gaps(self, noisy_csv):
        """Should place 997 rows on a 1000-slot daily grid with two gaps."""
        series, gaps = CsvSeriesRepository().load(noisy_csv)
        assert len(series) == 1000
        assert series.step == timedelta(days=1)
        assert series.origin == datetime(2015, 1, 1)
        assert gaps.gaps == ((100, 1), (400, 2))

    def test_integer_timestamps_need_step(self, write_csv):
        """Should refuse integer timestamps without an explicit step."""
        path = write_csv([(0, 1.0), (1, 2.0), (2, 3.0)])
        with pytest.raises(ValidationError, match="step"):
            CsvSeriesRepository().load(path)

    def test_integer_timestamps_with_step(self, write_csv):
        """Should map integer k to 1970-01-01 + k * step."""
        path = write_csv([(0, 1.0), (1, 2.0), (3, 4.0)])
        series, gaps = CsvSeriesRepository().load(path, step=timedelta(hours=1))
        assert series.origin == EPOCH
        assert series.step == timedelta(hours=1)
        assert gaps.gaps == ((2, 1),)

    def test_timezone_offsets_become_utc(self, write_csv):
        """Should convert offset timestamps to naive UTC."""
        path = write_csv([("2020-01-01T02:00:00+02:00", 1.0), ("2020-01-02T00:00:00Z", 2.0)])
        series, _ = CsvSeriesRepository().load(path)
        assert series.origin == datetime(2020, 1, 1)
        assert len(series) == 2

    def test_missing_file_raises(self, tmp_path):
        """Should raise DataSourceError naming the path."""
        path = str(tmp_path / "nope.csv")
        with pytest.raises(DataSourceError, match="nope.csv"):
            CsvSeriesRepository().load(path)

    def test_wrong_header_raises(self, write_csv):
        """Should require the timestamp,value header."""
        path = write_csv([("2020-01-01", 1.0)], header="time,val")
        with pytest.raises(DataSourceError, match="header"):
            CsvSeriesRepository().load(path)

    def test_non_numeric_value_raises(self, write_csv):
        """Should name the offending line."""
        path = write_csv([("2020-01-01", 1.0), ("2020-01-02", "abc")])
        with pytest.raises(DataSourceError, match="line 3"):
            CsvSeriesRepository().load(path)

    def test_header_only_raises(self, write_csv):
        """Should reject a file without data rows."""
        with pytest.raises(DataSourceError, match="no data"):
            CsvSeriesRepository().load(write_csv([]))

    def test_save_then_load(self, tmp_path, make_series):
        """Should write ISO timestamps that load back onto the same grid."""
        repo = CsvSeriesRepository()
        series = make_series([1.5, 2.5, 3.5])
        path = repo.save(str(tmp_path / "nested" / "s.csv"), series)
        loaded, gaps = repo.load(path)
        assert gaps.is_empty
        assert loaded.origin == series.origin
        np.testing.assert_array_equal(loaded.values, series.values)

    def test_sha256_is_stable(self, noisy_csv):
        """Should hash the raw file bytes."""
        repo = CsvSeriesRepository()
        assert repo.sha256(noisy_csv) == repo.sha256(noisy_csv)
        assert len(repo.sha256(noisy_csv)) == 64

    def test_infer_step_uses_smallest_spacing(self):
        """Should take the smallest positive spacing as the step."""
        t0 = datetime(2020, 1, 1)
        stamps = [t0, t0 + timedelta(hours=2), t0 + timedelta(hours=3)]
        assert infer_step(stamps) == timedelta(hours=1)


class TestJsonReportRepository:
    """Tests for JsonReportRepository."""

    def test_save_and_load(self, tmp_path, sample_result):
        """Should restore an equal ExperimentResult."""
        repo = JsonReportRepository()
        result = sample_result()
        path = repo.save(str(tmp_path / "r.json"), result)
        assert repo.load(path) == result

    def test_document_layout(self, tmp_path, sample_result):
        """Should store schema version, per-fold and averaged metrics."""
        path = JsonReportRepository().save(str(tmp_path / "r.json"), sample_result())
        data = json.loads(open(path, encoding="utf-8").read())
        assert data["schema_version"] == 1
        assert len(data["folds"]) == 2
        assert data["averaged"]["n_peaks"] == 5
        assert data["config"]["model"] == "ppfd-ann"

    def test_unknown_schema_version_raises(self, tmp_path, sample_result):
        """Should raise ReportSchemaError for other versions."""
        repo = JsonReportRepository()
        path = repo.save(str(tmp_path / "r.json"), sample_result())
        data = json.loads(open(path, encoding="utf-8").read())
        data["schema_version"] = 99
        (tmp_path / "r.json").write_text(json.dumps(data), encoding="utf-8")
        with pytest.raises(ReportSchemaError) as exc_info:
            repo.load(path)
        assert exc_info.value.found == 99

    def test_invalid_json_raises(self, tmp_path):
        """Should raise DataSourceError for malformed JSON."""
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(DataSourceError, match="invalid JSON"):
            JsonReportRepository().load(str(path))


class TestJsonModelRepository:
    """Tests for JsonModelRepository."""

    @pytest.mark.parametrize("kind", list(ModelKind))
    def test_saved_model_forecasts_identically(self, tmp_path, make_series, rng, kind):
        """Should reload a model that gives the same forecasts."""
        t = np.arange(150)
        values = 20.0 + 0.1 * t + 3.0 * np.sin(2 * np.pi * t / 7) + rng.normal(scale=0.3, size=150)
        training = make_series(values[:120])
        config = ExperimentConfig(
            model=kind,
            c=2 if kind.is_ppfd else None,
            ann=AnnConfig(epochs=20),
            arima=ArimaConfig(order=(1, 1)),
        )
        model = DefaultForecasterFactory().fit(kind, training, config, seed=0)
        fitted = FittedModel(
            kind=kind,
            model=model,
            training_length=120,
            origin=training.origin,
            step=training.step,
            config=config,
        )
        repo = JsonModelRepository()
        loaded = repo.load(repo.save(str(tmp_path / "m.json"), fitted))

        assert loaded.kind is kind
        assert loaded.training_length == 120
        assert loaded.origin == training.origin
        assert loaded.step == training.step
        assert loaded.config.detrend is config.detrend
        assert loaded.config.window == config.window
        np.testing.assert_allclose(
            loaded.model.forecast(values, 120, 150), model.forecast(values, 120, 150), rtol=1e-12
        )


class TestPandasTableWriter:
    """Tests for PandasTableWriter."""

    def test_write_csv(self, tmp_path):
        """Should write a header and one line per row."""
        path = PandasTableWriter().write(
            str(tmp_path / "t.csv"), ["a", "b"], [{"a": 1, "b": 2.5}, {"a": 2, "b": 3.5}]
        )
        assert open(path, encoding="utf-8").read().splitlines() == ["a,b", "1,2.5", "2,3.5"]

    def test_render_text(self):
        """Should align columns and include the header."""
        text = PandasTableWriter().render(["Model", "c"], [{"Model": "ANN", "c": ""}])
        assert text.splitlines()[0].split() == ["Model", "c"]
        assert "ANN" in text
