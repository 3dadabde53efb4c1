"""
Tests for the scaling pipeline and its stepwise inverse.
"""

import numpy as np
import pytest

from ppfd.domain.entities.scaling import ScalingState
from ppfd.domain.exceptions import ScalingError
from ppfd.domain.services.scaling import (
    apply_forward,
    fit_forward,
    forward_window,
    invert_step,
)


class TestFitForward:
    """Tests for fit_forward."""

    def test_two_point_series(self, make_series):
        """Should scale [0, 10] to y = [1] with s_prev = 2."""
        y, state = fit_forward(make_series([0.0, 10.0]))
        assert y.values.tolist() == [1.0]
        assert (state.x_min, state.x_max) == (0.0, 10.0)
        assert state.l_max_abs == pytest.approx(1.0)
        assert state.s_prev == 2.0

    def test_output_starts_one_step_later(self, make_series):
        """Should drop the first sample and shift the origin by one step."""
        series = make_series([1.0, 3.0, 2.0, 5.0])
        y, _ = fit_forward(series)
        assert len(y) == 3
        assert y.origin == series.timestamp_at(1)

    def test_constant_series_raises(self, make_series):
        """Should raise ScalingError for a zero range."""
        with pytest.raises(ScalingError, match="zero range"):
            fit_forward(make_series([3.0, 3.0, 3.0]))

    def test_nearly_constant_large_series_raises(self, make_series):
        """Should treat float noise around a large constant as zero range."""
        with pytest.raises(ScalingError, match="zero range"):
            fit_forward(make_series([1e9, 1e9 + 1e-7, 1e9 - 1e-7]))

    def test_single_value_raises(self, make_series):
        """Should need at least two values."""
        with pytest.raises(ScalingError):
            fit_forward(make_series([1.0]))

    def test_outputs_bounded_by_one(self, make_series, rng):
        """Should put every y in [-1, 1] with the extreme exactly at magnitude 1."""
        y, _ = fit_forward(make_series(rng.normal(size=200).cumsum()))
        assert np.all(np.abs(y.values) <= 1.0)
        assert np.max(np.abs(y.values)) == 1.0

    def test_increasing_series_gives_positive_outputs(self, make_series, rng):
        """Should map strictly increasing input into (0, 1]."""
        y, _ = fit_forward(make_series(np.cumsum(rng.uniform(0.1, 1.0, size=50))))
        assert np.all(y.values > 0)
        assert np.all(y.values <= 1.0)

    def test_sign_follows_differences(self, make_series, rng):
        """Should keep the sign of each first difference."""
        x = rng.normal(size=100)
        y, _ = fit_forward(make_series(x))
        np.testing.assert_array_equal(np.sign(y.values), np.sign(np.diff(x)))


class TestStepwiseTransform:
    """Tests for apply_forward, forward_window and invert_step."""

    @pytest.fixture
    def state(self):
        return ScalingState(x_min=0.0, x_max=10.0, l_max_abs=0.5, s_prev=2.0)

    def test_apply_forward_at_max_is_zero(self, state):
        """Should give y = 0 when the value repeats the last one."""
        assert apply_forward(10.0, state) == 0.0
        assert state.s_prev == 2.0

    def test_apply_forward_advances_state(self, state):
        """Should move s_prev to the scaled new value."""
        apply_forward(0.0, state)
        assert state.s_prev == 1.0

    def test_apply_forward_accepts_out_of_range(self, state):
        """Should transform values above the training max."""
        y = apply_forward(20.0, state)
        assert y > 0
        assert state.s_prev == pytest.approx(3.0)

    def test_invert_zero_returns_last_value(self, state):
        """Should map y = 0 back to the value behind s_prev."""
        assert invert_step(0.0, state) == pytest.approx(10.0)

    def test_invert_does_not_mutate(self, state):
        """Should leave s_prev untouched."""
        invert_step(0.3, state)
        assert state.s_prev == 2.0

    def test_invert_known_value(self):
        """Should compute s_next = s_prev * (1 + y * |L_max|) and descale it."""
        state = ScalingState(x_min=0.0, x_max=10.0, l_max_abs=0.5, s_prev=1.2)
        assert invert_step(1.0, state) == pytest.approx(8.0)

    def test_invert_with_non_positive_s_prev_raises(self, state):
        """Should raise ScalingError for s_prev <= 0."""
        state.s_prev = 0.0
        with pytest.raises(ScalingError):
            invert_step(0.1, state)

    def test_forward_window_matches_training_transform(self, make_series, rng):
        """Should reproduce the tail of the training y from a raw window."""
        x = 50.0 + rng.normal(size=40).cumsum()
        y, state = fit_forward(make_series(x))
        window_y, window_state = forward_window(x[-8:], state)
        np.testing.assert_allclose(window_y, y.values[-7:], rtol=1e-12, atol=1e-15)
        assert window_state.s_prev == pytest.approx(state.s_prev)
        assert window_state is not state

    def test_round_trip_random_series(self, make_series, rng):
        """Should invert the forward transform step by step to 1e-10."""
        for _ in range(1000):
            n = int(rng.integers(3, 40))
            x = rng.normal(loc=rng.uniform(-100, 100), scale=rng.uniform(0.1, 50), size=n)
            y, fitted = fit_forward(make_series(x))
            state = fitted.copy()
            state.prime(x[0])
            tolerance = 1e-10 * max(np.max(np.abs(x)), fitted.span)
            for t in range(1, n):
                assert abs(invert_step(y.values[t - 1], state) - x[t]) <= tolerance
                apply_forward(x[t], state)
