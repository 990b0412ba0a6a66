import math

import numpy as np
import pytest

from core.analytic import chain_locked_state, chain_residual, chain_threshold, standard_chain_locked_state, \
    standard_chain_residual
from core.coupling import profile
from core.errors import AboveThresholdError, NoSolutionError
from core.frequencies import FrequencyVector, cumulative_deviations, sample_uniform
from core.models import Scheme, Topology


def test_two_oscillators_lock_at_arcsine(sine, sine_profile):
    cd = cumulative_deviations(FrequencyVector([1., -1.]))
    state = chain_locked_state(sine, sine_profile, cd, 0.5)
    assert state.phi == pytest.approx([math.asin(0.5)], abs=1e-12)
    assert state.omega == 0.
    assert state.stable
    assert (state.topology, state.scheme) == (Topology.CHAIN, Scheme.TELESCOPIC)


def test_zero_width_is_rest(sine, sine_profile):
    state = chain_locked_state(sine, sine_profile, cumulative_deviations(sample_uniform(6, 0)), 0.)
    assert np.allclose(state.phi, 0., atol=1e-12)


def test_near_threshold(sine, sine_profile, counterexample_frequencies):
    cd = cumulative_deviations(counterexample_frequencies)
    state = chain_locked_state(sine, sine_profile, cd, 1. - 1e-6)
    assert state.phi == pytest.approx([math.pi / 2, -math.pi / 2, -math.pi / 2], abs=2e-3)


@pytest.mark.parametrize('gamma', [1., 1.3])
def test_above_threshold(sine, sine_profile, gamma):
    with pytest.raises(AboveThresholdError):
        chain_locked_state(sine, sine_profile, cumulative_deviations(FrequencyVector([1., -1.])), gamma)


def test_negative_width(sine, sine_profile):
    with pytest.raises(ValueError):
        chain_locked_state(sine, sine_profile, cumulative_deviations(FrequencyVector([1., -1.])), -0.1)


def test_constructed_states_solve_the_chain(coupling_functions):
    rng = np.random.default_rng(23)
    for f in coupling_functions:
        p = profile(f)
        for _ in range(15):
            fv = sample_uniform(int(rng.integers(2, 40)), int(rng.integers(10_000)))
            cd = cumulative_deviations(fv)
            gamma = rng.uniform(0., 0.999) * chain_threshold(p, cd)
            state = chain_locked_state(f, p, cd, gamma)
            assert np.max(chain_residual(state, f, cd)) <= 1e-9
            assert state.omega == pytest.approx(gamma * fv.eta.mean())
            assert np.allclose(state.natural_frequencies, gamma * fv.eta)


def test_standard_chain_of_odd_function_is_the_telescopic_one(sine, sine_profile):
    for seed in range(5):
        fv = sample_uniform(7, seed)
        cd = cumulative_deviations(fv)
        gamma = 0.6 * chain_threshold(sine_profile, cd)
        standard = standard_chain_locked_state(sine, sine_profile, fv, gamma)
        telescopic = chain_locked_state(sine, sine_profile, cd, gamma)
        assert standard.scheme == Scheme.STANDARD
        assert standard.omega == pytest.approx(telescopic.omega, abs=1e-9)
        assert np.allclose(standard.phi, telescopic.phi, rtol=0., atol=1e-8)


def test_standard_chain_residuals(shifted_sine):
    p = profile(shifted_sine)
    found = 0
    for seed in range(10):
        fv = sample_uniform(8, seed)
        gamma = 0.3 * chain_threshold(p, cumulative_deviations(fv))
        try:
            state = standard_chain_locked_state(shifted_sine, p, fv, gamma)
        except NoSolutionError:
            continue
        found += 1
        assert np.max(standard_chain_residual(state, shifted_sine)) < 1e-8
    assert found > 0


def test_standard_chain_without_solution(shifted_sine):
    p = profile(shifted_sine)
    with pytest.raises(NoSolutionError):
        standard_chain_locked_state(shifted_sine, p, FrequencyVector([10., -10.]), 1.)


def test_standard_chain_of_the_shifted_sine(shifted_sine):
    p = profile(shifted_sine)
    fv = sample_uniform(5, 11)
    gamma = 0.1 * chain_threshold(p, cumulative_deviations(fv))
    state = standard_chain_locked_state(shifted_sine, p, fv, gamma)
    assert state.scheme == Scheme.STANDARD
    assert state.phi.shape == (4,)
    assert np.max(standard_chain_residual(state, shifted_sine)) < 1e-8
