"""Unit and property tests for the synthetic gait generator."""

import math

import numpy as np
import pytest
from dataclasses import replace
from hypothesis import given, settings, strategies as st

from exosim import (GaitPattern, InvalidParameterError, PiecewiseLinear,
                    constant_profile, default_gait_pattern, measurement_noise,
                    synth_series)
from exosim.gait import (CADENCE_MAX_HZ, sample_count, series_arrays,
                         stand_to_walk_arrays)


class TestPiecewiseLinear:
    def test_needs_points(self):
        with pytest.raises(InvalidParameterError):
            PiecewiseLinear([])

    def test_times_strictly_increasing(self):
        with pytest.raises(InvalidParameterError):
            PiecewiseLinear([(0.0, 1.0), (0.0, 2.0)])
        with pytest.raises(InvalidParameterError):
            PiecewiseLinear([(-1.0, 1.0)])

    def test_value_interpolates_and_clamps(self):
        prof = PiecewiseLinear([(1.0, 2.0), (3.0, 4.0)])
        assert prof.value(0.0) == 2.0
        assert prof.value(2.0) == pytest.approx(3.0)
        assert prof.value(10.0) == 4.0
        assert prof.min_value() == 2.0 and prof.max_value() == 4.0

    def test_integral_matches_trapezoid_geometry(self):
        prof = PiecewiseLinear([(1.0, 2.0), (3.0, 4.0)])
        # constant 2 before the first knot, then a trapezoid
        assert prof.integral(1.0) == pytest.approx(2.0)
        assert prof.integral(3.0) == pytest.approx(2.0 + 0.5 * (2.0 + 4.0) * 2.0)
        assert prof.integral(5.0) == pytest.approx(8.0 + 4.0 * 2.0)
        mid = prof.integral(2.0)
        assert mid == pytest.approx(2.0 + 0.5 * (2.0 + 3.0) * 1.0)

    @settings(max_examples=50, deadline=None)
    @given(st.floats(min_value=0.0, max_value=20.0),
           st.floats(min_value=0.0, max_value=20.0))
    def test_integral_is_additive(self, a, b):
        prof = PiecewiseLinear([(0.5, 1.0), (2.0, 3.0), (4.0, 0.5)])
        lo, hi = min(a, b), max(a, b)
        direct = prof.integral(hi) - prof.integral(lo)
        # value is bounded, so the segment integral is too
        assert direct >= -1e-12
        assert direct <= 3.0 * (hi - lo) + 1e-9


def test_constant_profile_holds_forever():
    prof = constant_profile(0.9)
    for t in (0.0, 1.0, 1e4):
        assert prof.value(t) == 0.9
    assert prof.integral(10.0) == pytest.approx(9.0)


def test_sample_count_grid():
    assert sample_count(1.0, 0.1) == 11
    assert sample_count(10.0, 0.001) == 10001
    # 60.0 / 0.001 lands just below 60000 in floats; the closed grid must
    # still include the endpoint
    assert sample_count(60.0, 0.001) == 60001
    with pytest.raises(InvalidParameterError):
        sample_count(0.0, 0.1)
    with pytest.raises(InvalidParameterError):
        sample_count(1.0, 0.0)


def test_pattern_validation():
    with pytest.raises(InvalidParameterError):
        GaitPattern(base_harmonics=(), offset=0.0,
                    cadence_profile=constant_profile(0.9))
    with pytest.raises(InvalidParameterError):
        GaitPattern(base_harmonics=((0.3, math.nan),), offset=0.0,
                    cadence_profile=constant_profile(0.9))
    with pytest.raises(InvalidParameterError):
        GaitPattern(base_harmonics=((0.3, 0.0),), offset=0.0,
                    cadence_profile=constant_profile(CADENCE_MAX_HZ + 1.0))
    with pytest.raises(InvalidParameterError):
        GaitPattern(base_harmonics=((0.3, 0.0),), offset=0.0,
                    cadence_profile=constant_profile(0.9), noise_std=-0.1)


def test_default_pattern_shape():
    pat = default_gait_pattern()
    assert pat.n_harmonics == 3
    assert pat.noise_std > 0.0


def test_series_is_deterministic():
    pat = default_gait_pattern()
    t1, r1, l1, p1, s1 = series_arrays(pat, 3.0, 0.001)
    t2, r2, l2, p2, s2 = series_arrays(pat, 3.0, 0.001)
    for a, b in ((t1, t2), (r1, r2), (l1, l2), (p1, p2), (s1, s2)):
        assert np.array_equal(a, b)


def test_noise_is_separable_and_seeded():
    noisy = default_gait_pattern()
    clean = replace(noisy, noise_std=0.0)
    t, r_n, l_n, _, _ = series_arrays(noisy, 2.0, 0.001)
    _, r_c, l_c, _, _ = series_arrays(clean, 2.0, 0.001)
    noise = measurement_noise(noisy, len(t))
    assert np.array_equal(r_c + noise[:, 0], r_n)
    assert np.array_equal(l_c + noise[:, 1], l_n)
    assert np.array_equal(measurement_noise(clean, len(t)), np.zeros((len(t), 2)))
    reseeded = replace(noisy, seed=noisy.seed + 1)
    _, r_other, _, _, _ = series_arrays(reseeded, 2.0, 0.001)
    assert not np.array_equal(r_other, r_n)


def test_left_leg_lags_half_a_stride():
    pat = replace(default_gait_pattern(), noise_std=0.0,
                  cadence_profile=constant_profile(1.0))
    t, q_r, q_l, _, _ = series_arrays(pat, 4.0, 0.005)
    half = 100  # 0.5 s at dt 0.005 when the stride takes 1 s
    assert np.max(np.abs(q_l[:-half] - q_r[half:])) < 1e-12


def test_samples_match_arrays():
    pat = default_gait_pattern()
    samples = synth_series(pat, 1.0, 0.01)
    t, q_r, q_l, _, _ = series_arrays(pat, 1.0, 0.01)
    assert len(samples) == len(t) == 101
    assert samples[7].t == t[7]
    assert samples[7].q_right == q_r[7]
    assert samples[7].q_left == q_l[7]


class TestStandToWalk:
    def test_stance_is_flat_then_phase_runs(self):
        pat = replace(default_gait_pattern(), noise_std=0.0)
        t, q_r, q_l, phase, scale = stand_to_walk_arrays(pat, 1.0, 2.0, 10.0, 0.001)
        onset = int(math.ceil(1.0 / 0.001 - 1e-9))
        assert np.all(q_r[:onset] == pat.offset)
        assert np.all(q_l[:onset] == pat.offset)
        assert np.all(phase[:onset] == 0.0)
        assert np.all(scale[:onset] == 0.0)
        assert np.all(np.diff(phase[onset:]) > 0.0)

    def test_amplitude_ramp_is_monotone_to_full(self):
        pat = replace(default_gait_pattern(), noise_std=0.0)
        _, _, _, _, scale = stand_to_walk_arrays(pat, 1.0, 2.0, 10.0, 0.001)
        ramp = scale[1000:3001]
        assert np.all(np.diff(ramp) >= 0.0)
        assert ramp[-1] == pytest.approx(1.0)
        assert np.all(scale[3001:] == pytest.approx(1.0))

    def test_rejects_impossible_durations(self):
        pat = default_gait_pattern()
        with pytest.raises(InvalidParameterError):
            stand_to_walk_arrays(pat, 6.0, 5.0, 10.0, 0.001)
        with pytest.raises(InvalidParameterError):
            stand_to_walk_arrays(pat, -1.0, 2.0, 10.0, 0.001)


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=0.2, max_value=2.5),
       st.floats(min_value=0.0, max_value=0.6),
       st.integers(min_value=0, max_value=2 ** 31 - 1))
def test_generated_series_are_finite(cadence, amp, seed):
    pat = GaitPattern(base_harmonics=((amp, 0.0), (amp / 3.0, 1.0)),
                      offset=0.05, cadence_profile=constant_profile(cadence),
                      noise_std=0.004, seed=seed)
    t, q_r, q_l, phase, scale = series_arrays(pat, 1.5, 0.002)
    assert len(t) == sample_count(1.5, 0.002)
    for arr in (q_r, q_l, phase, scale):
        assert np.all(np.isfinite(arr))
    assert np.all(np.diff(t) > 0.0)
