"""
Pytest configuration and shared fixtures for the ppfd tests.
"""

from datetime import datetime, timedelta
from pathlib import Path

import numpy as np
import pytest

from ppfd.domain.entities.evaluation import (
    EvaluationReport,
    ExperimentConfig,
    ExperimentResult,
    MetricReport,
    RunManifest,
)
from ppfd.domain.entities.series import TimeSeries
from ppfd.domain.entities.synth import SynthSpec
from ppfd.domain.services.synthgen import generate
from ppfd.infrastructure.container import get_settings

FIXTURES = Path(__file__).parent / "fixtures"
ORIGIN = datetime(2000, 1, 1)
DAY = timedelta(days=1)


@pytest.fixture
def rng():
    """Seeded generator so random tests are repeatable."""
    return np.random.default_rng(20240101)


@pytest.fixture
def make_series():
    """Build a daily TimeSeries from plain values."""

    def _make(values, origin=ORIGIN, step=DAY):
        return TimeSeries(values=np.asarray(values, dtype=np.float64), origin=origin, step=step)

    return _make


@pytest.fixture(scope="session")
def synthetic_series():
    """The default 7500-point synthetic series."""
    return generate(SynthSpec())


@pytest.fixture
def noisy_csv():
    """1000 daily samples with three interior rows missing (indices 100, 400, 401)."""
    return str(FIXTURES / "noisy_daily.csv")


@pytest.fixture
def write_csv(tmp_path):
    """Write a timestamp,value CSV from (timestamp, value) pairs."""

    def _write(rows, name="series.csv", header="timestamp,value"):
        path = tmp_path / name
        lines = [header] + [f"{ts},{value}" for ts, value in rows]
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def sample_result():
    """Build a two-fold ExperimentResult without running anything."""

    def _build(alpha=0.2, model="ppfd-ann", c=3):
        fold = MetricReport(0.1, 0.05, 0.2, 0.1, 3, 2, 100, 5, alpha)
        config = ExperimentConfig(model=model, c=c if model.startswith("ppfd") else None, alpha=alpha)
        echo = config.to_dict()
        echo["c"] = c
        return ExperimentResult(
            config=echo,
            report=EvaluationReport(per_fold=(fold, fold), averaged=fold),
            manifest=RunManifest(
                tool_version="0.1.0",
                input_path="data.csv",
                input_sha256="0" * 64,
                config_hash="f" * 64,
                outputs=("report.json",),
            ),
            runtime_seconds=1.5,
        )

    return _build


@pytest.fixture(autouse=True)
def set_test_env(tmp_path, monkeypatch):
    """Point default outputs at a temp dir and reload settings per test."""
    monkeypatch.setenv("PPFD_OUTPUT_DIR", str(tmp_path / "results"))
    monkeypatch.setenv("PPFD_LOG_LEVEL", "WARNING")
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
