import math
from dataclasses import replace

import numpy as np

from core.analytic import LockedState, chain_locked_state, chain_threshold, check_stability, jacobian_at
from core.coupling import profile
from core.frequencies import FrequencyVector, cumulative_deviations, sample_uniform
from core.models import Scheme, Topology


def test_lambda_states_are_stable(coupling_functions):
    rng = np.random.default_rng(31)
    for f in coupling_functions:
        p = profile(f)
        for _ in range(10):
            fv = sample_uniform(int(rng.integers(2, 13)), int(rng.integers(10_000)))
            cd = cumulative_deviations(fv)
            state = chain_locked_state(f, p, cd, rng.uniform(0., 0.99) * chain_threshold(p, cd))

            jacobian = jacobian_at(state, f)
            assert np.allclose(jacobian, jacobian.T, atol=1e-12)
            assert np.allclose(jacobian.sum(axis=1), 0., atol=1e-12)
            eigenvalues = np.linalg.eigvalsh(jacobian)
            assert np.all(eigenvalues <= 1e-10)
            assert np.count_nonzero(np.abs(eigenvalues) < 1e-8) == 1
            assert state.stable and check_stability(state, f)


def test_state_outside_lambda_is_unstable(sine):
    eta = np.array([1., -1.])
    phi = np.array([math.pi - math.asin(0.5)])
    state = LockedState(phi, 0.5, 0., Topology.CHAIN, Scheme.TELESCOPIC, stable=False, eta=eta)
    assert not check_stability(state, sine)


def test_splay_ring_state_stability_depends_on_the_twist(sine):
    eta = np.zeros(8)
    twisted = LockedState(np.full(7, -2 * math.pi / 8), 0., 0., Topology.RING, Scheme.TELESCOPIC, False, eta)
    assert check_stability(twisted, sine)
    anti = replace(twisted, phi=np.full(7, math.pi))
    assert not check_stability(anti, sine)


def test_frozen_chain_has_a_single_zero_mode(sine):
    state = LockedState(np.zeros(3), 0., 0., Topology.CHAIN, Scheme.STANDARD, False, np.zeros(4))
    assert check_stability(state, sine)
    assert np.allclose(jacobian_at(state, sine).sum(axis=0), 0.)
    assert check_stability(state, sine) == check_stability(replace(state, scheme=Scheme.TELESCOPIC), sine)


def test_stable_flag_is_not_consulted(sine):
    state = LockedState(np.array([0.3]), 0.1, 0., Topology.CHAIN, Scheme.TELESCOPIC, stable=False,
                        eta=FrequencyVector([1., -1.]).eta)
    assert check_stability(state, sine)
