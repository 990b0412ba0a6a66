import math

import numpy as np
import pytest

from core.dynamics import PhaseArray, PhaseState, SystemConfig, velocity_field, winding_number
from core.frequencies import FrequencyVector, sample_uniform
from core.models import Scheme, Topology

ALL_VARIANTS = [(t, s) for t in Topology for s in Scheme]


@pytest.mark.parametrize('changes', [{'gamma': -1.}, {'dt': 0.}, {'transient_time': 0.}, {'observation_time': -5.},
                                     {'lock_tolerance': 0.}])
def test_invalid_config(sine, changes):
    with pytest.raises(ValueError):
        SystemConfig(sine, FrequencyVector([1., -1.]), **{'gamma': 1., **changes})


def test_config_defaults(sine):
    cfg = SystemConfig(sine, sample_uniform(5, 0), 0.3)
    assert (cfg.topology, cfg.scheme) == (Topology.CHAIN, Scheme.TELESCOPIC)
    assert (cfg.dt, cfg.transient_time, cfg.observation_time, cfg.lock_tolerance) == (0.125, 2_000., 500., 1e-3)
    assert cfg.n == 5
    assert np.allclose(cfg.natural_frequencies, 0.3 * cfg.fv.eta)


@pytest.mark.parametrize('topology, scheme', ALL_VARIANTS)
def test_zero_width_rest_state(shifted_sine, topology, scheme):
    cfg = SystemConfig(shifted_sine, sample_uniform(6, 1), 0., topology, scheme)
    assert np.array_equal(velocity_field(cfg, PhaseState.zeros(6)), np.zeros(6))


@pytest.mark.parametrize('scheme', list(Scheme))
def test_two_oscillator_velocity(sine, scheme):
    cfg = SystemConfig(sine, FrequencyVector([1., -1.]), 0., Topology.CHAIN, scheme)
    assert velocity_field(cfg, PhaseState(np.array([math.pi / 2, 0.]))) == pytest.approx([-1., 1.])


@pytest.mark.parametrize('topology', list(Topology))
def test_odd_coupling_fields_agree(sine, topology):
    rng = np.random.default_rng(0)
    fv = sample_uniform(9, 2)
    for _ in range(10):
        state = PhaseState(rng.uniform(-5, 5, 9))
        standard = velocity_field(SystemConfig(sine, fv, 0.7, topology, Scheme.STANDARD), state)
        telescopic = velocity_field(SystemConfig(sine, fv, 0.7, topology, Scheme.TELESCOPIC), state)
        assert np.allclose(standard, telescopic, atol=1e-14)


def test_phase_array_batches_configs(shifted_sine):
    configs = [SystemConfig(shifted_sine, sample_uniform(4, seed), 0.5, Topology.RING) for seed in range(3)]
    array = PhaseArray.from_configs(configs)
    assert array.omega.shape == (3, 4)
    theta = np.random.default_rng(3).uniform(-2, 2, (3, 4))
    velocity = array.velocity(theta)
    for row, cfg in enumerate(configs):
        assert np.allclose(velocity[row], velocity_field(cfg, PhaseState(theta[row])))
    assert array.edge_differences(theta).shape == (3, 4)


def test_phase_array_rejects_mixed_systems(sine, shifted_sine):
    fv = sample_uniform(4, 0)
    with pytest.raises(ValueError):
        PhaseArray.from_configs([SystemConfig(sine, fv, 0.1), SystemConfig(shifted_sine, fv, 0.1)])
    with pytest.raises(ValueError):
        PhaseArray.from_configs([SystemConfig(sine, fv, 0.1), SystemConfig(sine, sample_uniform(5, 0), 0.1)])


def test_winding_number():
    n = 8
    assert winding_number(2 * math.pi * np.arange(n) / n) == 1
    assert winding_number(-4 * math.pi * np.arange(n) / n) == -2
    assert winding_number(np.zeros(n)) == 0
    assert winding_number(np.full(n, 40.)) == 0
    assert winding_number(2 * math.pi * np.arange(n) / n, Topology.CHAIN) == 0
