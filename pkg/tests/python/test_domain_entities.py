"""
Tests for domain entities.

Tests pure domain logic without any infrastructure dependencies.
"""

import math
from datetime import datetime, timedelta

import numpy as np
import pytest

from ppfd.domain.entities.evaluation import (
    AnnConfig,
    ArimaConfig,
    ExperimentConfig,
    MetricReport,
    ModelKind,
    PeakSet,
    SeriesSummary,
)
from ppfd.domain.entities.scaling import ScalingState
from ppfd.domain.entities.series import GapReport, TimeSeries
from ppfd.domain.entities.spectrum import Sinusoid, Spectrum
from ppfd.domain.entities.synth import SeasonalComponent, SynthSpec
from ppfd.domain.exceptions import (
    EmptySeriesError,
    GapError,
    ScalingError,
    SpectrumError,
    ValidationError,
)


class TestTimeSeries:
    """Tests for TimeSeries domain entity."""

    def test_values_are_read_only(self, make_series):
        """Should refuse in-place writes to the value array."""
        series = make_series([1.0, 2.0, 3.0])
        with pytest.raises(ValueError):
            series.values[0] = 10.0

    def test_empty_series_raises(self):
        """Should raise EmptySeriesError for no values."""
        with pytest.raises(EmptySeriesError):
            TimeSeries(values=np.array([]))

    def test_non_finite_value_without_mask_raises(self):
        """Should reject NaN that is not flagged as missing."""
        with pytest.raises(ValidationError, match="finite"):
            TimeSeries(values=np.array([1.0, np.nan, 3.0]))

    def test_non_positive_step_raises(self):
        """Should reject a zero step."""
        with pytest.raises(ValidationError, match="step"):
            TimeSeries(values=np.array([1.0]), step=timedelta(0))

    def test_masked_placeholders_are_allowed(self):
        """Should accept NaN in slots flagged as missing."""
        series = TimeSeries(
            values=np.array([1.0, np.nan, 3.0]), _missing=np.array([False, True, False])
        )
        assert not series.is_complete
        assert series.missing_mask.tolist() == [False, True, False]

    def test_all_false_mask_is_complete(self):
        """Should treat an all-false mask as a complete series."""
        series = TimeSeries(values=np.array([1.0, 2.0]), _missing=np.array([False, False]))
        assert series.is_complete

    def test_timestamps_follow_grid(self, make_series):
        """Should place index t at origin + t * step."""
        series = make_series([0.0] * 5, origin=datetime(2020, 1, 1), step=timedelta(hours=6))
        assert series.timestamp_at(3) == datetime(2020, 1, 1, 18)
        assert series.end == datetime(2020, 1, 2)
        assert len(series.timestamps()) == 5

    def test_slice_moves_origin(self, make_series):
        """Should start a slice at the timestamp of its first index."""
        series = make_series(np.arange(10.0))
        part = series.slice(4, 7)
        assert part.values.tolist() == [4.0, 5.0, 6.0]
        assert part.origin == series.timestamp_at(4)

    def test_slice_out_of_range_raises(self, make_series):
        """Should reject slices outside the series."""
        with pytest.raises(ValidationError):
            make_series([1.0, 2.0]).slice(1, 5)

    def test_require_complete_with_gaps_raises(self):
        """Should raise GapError when gaps remain."""
        series = TimeSeries(
            values=np.array([1.0, np.nan, 3.0]), _missing=np.array([False, True, False])
        )
        with pytest.raises(GapError):
            series.require_complete()

    def test_require_complete_checks_length(self, make_series):
        """Should raise when the series is shorter than required."""
        with pytest.raises(ValidationError, match="at least 2"):
            make_series([1.0]).require_complete(min_length=2)


class TestGapReport:
    """Tests for GapReport."""

    def test_from_mask_groups_runs(self):
        """Should turn runs of missing slots into (start, length) pairs."""
        report = GapReport.from_mask(np.array([False, True, True, False, True, False]))
        assert report.gaps == ((1, 2), (4, 1))
        assert report.missing_count == 3
        assert list(report.indices()) == [1, 2, 4]
        assert len(report) == 2

    def test_empty_mask_is_empty_report(self):
        """Should report no gaps for a full mask."""
        assert GapReport.from_mask(np.zeros(4, dtype=bool)).is_empty

    def test_overlapping_gaps_raise(self):
        """Should reject gaps that overlap."""
        with pytest.raises(ValidationError, match="disjoint"):
            GapReport(((1, 3), (2, 1)))


class TestSpectrum:
    """Tests for Spectrum and Sinusoid."""

    def test_length_mismatch_raises(self):
        """Should reject coefficient arrays whose length is not n."""
        with pytest.raises(SpectrumError):
            Spectrum(coeffs=np.zeros(4), n=5)

    def test_amplitudes_of_pure_cosine(self):
        """Should give the cosine amplitude at its bin."""
        n = 16
        t = np.arange(n)
        spectrum = Spectrum(coeffs=np.fft.fft(3.0 * np.cos(2 * np.pi * 2 * t / n)), n=n)
        amps = spectrum.amplitudes()
        assert amps[2] == pytest.approx(3.0)
        assert amps.shape == (n // 2 + 1,)
        assert spectrum.is_conjugate_symmetric()

    def test_sinusoid_period_and_frequency(self):
        """Should derive frequency k/n and period n/k."""
        s = Sinusoid(bin=4, n=28, amplitude=1.0, phase=0.0)
        assert s.frequency == pytest.approx(1 / 7)
        assert s.period == pytest.approx(7.0)

    def test_sinusoid_negative_amplitude_raises(self):
        """Should reject a negative amplitude."""
        with pytest.raises(ValidationError, match="amplitude"):
            Sinusoid(bin=1, n=8, amplitude=-1.0, phase=0.0)

    def test_sinusoid_values(self):
        """Should evaluate amplitude * cos(2 pi f t + phase)."""
        s = Sinusoid(bin=1, n=4, amplitude=2.0, phase=math.pi / 2)
        np.testing.assert_allclose(s.values_at(np.arange(4)), [0.0, -2.0, 0.0, 2.0], atol=1e-12)


class TestScalingState:
    """Tests for ScalingState."""

    def test_zero_range_raises(self):
        """Should reject x_max == x_min."""
        with pytest.raises(ScalingError, match="zero range"):
            ScalingState(x_min=1.0, x_max=1.0, l_max_abs=1.0, s_prev=1.0)

    def test_scale_maps_training_range_to_one_two(self):
        """Should map x_min to 1 and x_max to 2."""
        state = ScalingState(x_min=-5.0, x_max=5.0, l_max_abs=1.0, s_prev=1.0)
        assert state.scale(-5.0) == 1.0
        assert state.scale(5.0) == 2.0
        assert state.descale(1.5) == pytest.approx(0.0)

    def test_copy_is_independent(self):
        """Should not share s_prev with its copy."""
        state = ScalingState(x_min=0.0, x_max=1.0, l_max_abs=1.0, s_prev=1.0)
        clone = state.copy()
        clone.s_prev = 2.0
        assert state.s_prev == 1.0


class TestEvaluationEntities:
    """Tests for metric, peak and config entities."""

    def test_metric_report_counts_must_add_up(self):
        """Should reject under + over != n_peaks."""
        with pytest.raises(ValidationError, match="n_peaks"):
            MetricReport(0.1, 0.1, 0.1, 0.1, 1, 1, 10, 3, 0.2)

    def test_peak_set_must_increase(self):
        """Should reject unsorted peak indices."""
        with pytest.raises(ValidationError):
            PeakSet((3, 1))

    def test_ppfd_config_requires_c(self):
        """Should require c >= 1 for PPFD models."""
        with pytest.raises(ValidationError, match="c"):
            ExperimentConfig(model=ModelKind.PPFD_ANN, c=None)

    def test_baseline_config_without_c(self):
        """Should accept baselines without c."""
        config = ExperimentConfig(model=ModelKind.ANN)
        assert config.c is None

    def test_model_string_is_coerced(self):
        """Should accept the model as its string value."""
        config = ExperimentConfig(model="ppfd-arima", c=2)
        assert config.model is ModelKind.PPFD_ARIMA
        assert config.model.base == "arima"

    @pytest.mark.parametrize("alpha", [-0.1, 1.5, float("nan")])
    def test_alpha_outside_unit_interval_raises(self, alpha):
        """Should reject alpha outside [0, 1]."""
        with pytest.raises(ValidationError, match="alpha"):
            ExperimentConfig(model=ModelKind.ANN, alpha=alpha)

    def test_config_to_dict_is_json_ready(self):
        """Should store the model value and the ARIMA order as a list."""
        config = ExperimentConfig(
            model=ModelKind.PPFD_ARIMA, c=3, arima=ArimaConfig(order=(2, 1))
        )
        data = config.to_dict()
        assert data["model"] == "ppfd-arima"
        assert data["arima"]["order"] == [2, 1]
        assert data["ann"]["learning_rate"] == AnnConfig().learning_rate

    @pytest.mark.parametrize(
        "step,expected",
        [
            (timedelta(minutes=15), 24),
            (timedelta(hours=1), 24),
            (timedelta(hours=2), 7),
            (timedelta(days=1), 7),
        ],
    )
    def test_window_resolves_from_step(self, step, expected):
        """Should default to 24 lags up to hourly sampling and 7 above it."""
        config = ExperimentConfig(model=ModelKind.ANN)
        assert config.window is None
        assert config.resolved_window(step) == expected
        assert config.for_step(step).window == expected

    def test_explicit_window_wins(self):
        """Should keep a window given explicitly whatever the step."""
        config = ExperimentConfig(model=ModelKind.ANN, window=5)
        assert config.for_step(timedelta(hours=1)).window == 5

    def test_zero_window_raises(self):
        """Should reject a window below 1."""
        with pytest.raises(ValidationError, match="window"):
            ExperimentConfig(model=ModelKind.ANN, window=0)

    def test_display_names(self):
        """Should use the table labels for model kinds."""
        assert ModelKind.PPFD_ANN.display_name == "PPFD with ANN"
        assert ModelKind.FOURIER.display_name == "FOURIER"

    def test_summary_row_format(self):
        """Should render a pipe-separated statistics row."""
        summary = SeriesSummary(n=3, mean=2.0, min=1.0, median=2.0, max=3.0)
        assert summary.format_row("Synthetic") == "Synthetic | 3 | 2.0 | 1.0 | 2.0 | 3.0"


class TestSynthSpec:
    """Tests for synthetic series parameters."""

    def test_defaults(self):
        """Should default to 7500 daily points with three seasonalities."""
        spec = SynthSpec()
        assert spec.n == 7500
        assert [c.period for c in spec.components] == [7, 30, 365]

    def test_too_short_raises(self):
        """Should reject n < 2."""
        with pytest.raises(ValidationError):
            SynthSpec(n=1)

    def test_parse_component(self):
        """Should parse period:amplitude."""
        component = SeasonalComponent.parse("7:80000000")
        assert component.period == 7.0
        assert component.amplitude == 80_000_000.0

    @pytest.mark.parametrize("text", ["7", "a:b", "1:5", "7:-1"])
    def test_parse_component_rejects_bad_input(self, text):
        """Should raise ValidationError for malformed or invalid components."""
        with pytest.raises(ValidationError):
            SeasonalComponent.parse(text)
