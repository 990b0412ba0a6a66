import math

import numpy as np
import pytest

from core.analytic import chain_threshold, ratio_upper_bound, ring_upper_bound
from core.coupling import profile
from core.frequencies import FrequencyVector, cumulative_deviations, sample_uniform
from tests.conftest import shifted_sine_extremes


def test_two_sine_oscillators(sine_profile):
    cd = cumulative_deviations(FrequencyVector([1., -1.]))
    assert chain_threshold(sine_profile, cd) == pytest.approx(1., abs=1e-12)
    assert ring_upper_bound(sine_profile, cd) == pytest.approx(2., abs=1e-12)


def test_counterexample_thresholds(sine_profile, counterexample_frequencies):
    cd = cumulative_deviations(counterexample_frequencies)
    assert chain_threshold(sine_profile, cd) == pytest.approx(1., abs=1e-12)
    assert ring_upper_bound(sine_profile, cd) == pytest.approx(2., abs=1e-12)


def test_constant_frequencies_never_limit(sine_profile):
    cd = cumulative_deviations(FrequencyVector([0.4, 0.4, 0.4]))
    assert math.isinf(chain_threshold(sine_profile, cd))
    assert math.isinf(ring_upper_bound(sine_profile, cd))


def test_one_sided_deviations(sine_profile):
    cd = cumulative_deviations(FrequencyVector([2., 0., -2.]))
    assert cd.d_lower == 0.
    assert chain_threshold(sine_profile, cd) == pytest.approx(1. / cd.d_upper)


def test_ratio_bound_of_odd_function(sine_profile):
    assert ratio_upper_bound(sine_profile) == pytest.approx(2., abs=1e-12)


def test_ratio_bound_of_shifted_sine(shifted_sine):
    f_upper, f_lower = shifted_sine_extremes()
    expected = 1. + abs(f_lower / f_upper)
    assert ratio_upper_bound(profile(shifted_sine)) == pytest.approx(expected, abs=1e-9)
    assert ratio_upper_bound(profile(shifted_sine)) == pytest.approx(4.5939, abs=1e-4)


def test_ring_bound_over_chain_threshold_is_capped(coupling_functions):
    rng = np.random.default_rng(17)
    for f in coupling_functions:
        p = profile(f)
        for _ in range(25):
            cd = cumulative_deviations(sample_uniform(int(rng.integers(2, 30)), int(rng.integers(1_000))))
            ratio = ring_upper_bound(p, cd) / chain_threshold(p, cd)
            assert 1. - 1e-12 <= ratio <= ratio_upper_bound(p) + 1e-12
