"""
Tests for grid ingestion, gap filling, truncation and summary statistics.
"""

from datetime import datetime, timedelta

import numpy as np
import pytest

from ppfd.domain.entities.series import GapReport, TimeSeries
from ppfd.domain.exceptions import EmptySeriesError, GapError, SeriesGridError
from ppfd.domain.services.preprocessing import (
    describe,
    from_samples,
    linear_interpolate,
    truncate_after,
)

DAY = timedelta(days=1)
T0 = datetime(2021, 3, 1)


def days(*offsets):
    return [T0 + k * DAY for k in offsets]


class TestFromSamples:
    """Tests for from_samples."""

    def test_complete_grid(self):
        """Should produce a gap-free series for consecutive samples."""
        series, gaps = from_samples(days(0, 1, 2), [1.0, 2.0, 3.0], DAY)
        assert len(series) == 3
        assert gaps.is_empty
        assert series.is_complete
        assert series.origin == T0

    def test_missing_slot_is_reported(self):
        """Should report a skipped slot as a gap of length 1."""
        series, gaps = from_samples(days(0, 2), [1.0, 3.0], DAY)
        assert len(series) == 3
        assert gaps.gaps == ((1, 1),)
        assert series.missing_mask.tolist() == [False, True, False]

    def test_off_grid_timestamp_raises(self):
        """Should reject a timestamp between grid points."""
        timestamps = [T0, T0 + DAY + timedelta(hours=6)]
        with pytest.raises(SeriesGridError, match="off-grid"):
            from_samples(timestamps, [1.0, 2.0], DAY)

    def test_duplicate_timestamp_raises(self):
        """Should reject repeated timestamps."""
        with pytest.raises(SeriesGridError, match="duplicate"):
            from_samples(days(0, 1, 1), [1.0, 2.0, 3.0], DAY)

    def test_decreasing_timestamp_raises(self):
        """Should reject timestamps that go backwards."""
        with pytest.raises(SeriesGridError, match="increasing"):
            from_samples(days(0, 2, 1), [1.0, 2.0, 3.0], DAY)

    def test_empty_input_raises(self):
        """Should raise EmptySeriesError for no samples."""
        with pytest.raises(EmptySeriesError):
            from_samples([], [], DAY)


class TestLinearInterpolate:
    """Tests for linear_interpolate."""

    def test_single_gap(self):
        """Should fill the midpoint of two known values."""
        series, gaps = from_samples(days(0, 2), [2.0, 6.0], DAY)
        filled = linear_interpolate(series, gaps)
        assert filled.values.tolist() == [2.0, 4.0, 6.0]
        assert filled.is_complete

    def test_longer_gap(self):
        """Should space a multi-slot gap evenly."""
        series, gaps = from_samples(days(0, 3), [1.0, 7.0], DAY)
        filled = linear_interpolate(series, gaps)
        np.testing.assert_allclose(filled.values, [1.0, 3.0, 5.0, 7.0])

    def test_no_gaps_returns_same_series(self, make_series):
        """Should return the input untouched when nothing is missing."""
        series = make_series([1.0, 2.0])
        assert linear_interpolate(series, GapReport()) is series

    def test_leading_gap_raises(self):
        """Should refuse to extrapolate a gap at index 0."""
        series = TimeSeries(
            values=np.array([np.nan, 1.0, 2.0]), _missing=np.array([True, False, False])
        )
        with pytest.raises(GapError, match="index 0"):
            linear_interpolate(series, GapReport(((0, 1),)))

    def test_trailing_gap_raises(self):
        """Should refuse to extrapolate a gap at the end."""
        series = TimeSeries(
            values=np.array([1.0, 2.0, np.nan]), _missing=np.array([False, False, True])
        )
        with pytest.raises(GapError):
            linear_interpolate(series, GapReport(((2, 1),)))

    def test_filled_values_lie_on_the_flanking_line(self, rng):
        """Should match the two-point formula for random gaps."""
        values = rng.normal(size=60)
        keep = np.ones(60, dtype=bool)
        keep[[5, 6, 7, 20, 41, 42]] = False
        index = np.flatnonzero(keep)
        series, gaps = from_samples(days(*index.tolist()), values[keep].tolist(), DAY)
        filled = linear_interpolate(series, gaps).values

        for start, length in gaps.gaps:
            left, right = start - 1, start + length
            for i in range(start, start + length):
                expected = values[left] + (values[right] - values[left]) * (i - left) / (right - left)
                assert filled[i] == pytest.approx(expected, rel=1e-12, abs=1e-12)
        np.testing.assert_array_equal(filled[keep], values[keep])


class TestTruncateAfter:
    """Tests for truncate_after."""

    def test_keeps_prefix_up_to_cutoff(self, make_series):
        """Should keep samples with timestamp <= cutoff."""
        series = make_series(np.arange(10.0))
        cut = truncate_after(series, series.origin + 4 * DAY)
        assert len(cut) == 5

    def test_cutoff_between_samples(self, make_series):
        """Should drop the sample after a cutoff that falls mid-step."""
        series = make_series(np.arange(10.0))
        cut = truncate_after(series, series.origin + 4 * DAY + timedelta(hours=12))
        assert len(cut) == 5

    def test_cutoff_after_end_is_identity(self, make_series):
        """Should keep everything when the cutoff is past the end."""
        series = make_series(np.arange(10.0))
        assert truncate_after(series, series.origin + 100 * DAY) is series

    def test_cutoff_at_origin_keeps_one(self, make_series):
        """Should keep just the first sample when cutoff equals origin."""
        series = make_series(np.arange(10.0))
        assert len(truncate_after(series, series.origin)) == 1

    def test_cutoff_before_origin_raises(self, make_series):
        """Should raise EmptySeriesError when nothing would remain."""
        series = make_series(np.arange(10.0))
        with pytest.raises(EmptySeriesError):
            truncate_after(series, series.origin - DAY)


class TestDescribe:
    """Tests for describe."""

    def test_statistics(self, make_series):
        """Should compute n, mean, min, median and max."""
        summary = describe(make_series([4.0, 1.0, 3.0, 2.0]))
        assert summary.n == 4
        assert summary.mean == 2.5
        assert summary.min == 1.0
        assert summary.median == 2.5
        assert summary.max == 4.0
