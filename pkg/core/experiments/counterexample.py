import logging
import math
from dataclasses import dataclass, field
from typing import List

import numpy as np

from ..analytic import chain_locked_state, chain_threshold, ring_equation_residual, ring_exact_solution_exists
from ..coupling import CouplingFunction, profile
from ..dynamics import SystemConfig, detect_lock
from ..frequencies import cumulative_deviations, from_target_deviations
from ..models import Scheme, Topology

__all__ = ['Check', 'CounterexampleReport', 'counterexample_experiment', 'TARGET_DEVIATIONS']

logger = logging.getLogger(__name__)

TARGET_DEVIATIONS = (1., -1., -1.)
FORCED_POINT = (math.pi / 2, -math.pi / 2, -math.pi / 2)
NEAR_THRESHOLD = 1. - 1e-6
LOCKING_WIDTH = 0.5
THRESHOLD_TOL = 1e-12
# at Γ = 1 - 1e-6 the arcsine sits sqrt(2e-6) below π/2
PHASE_TOL = 1e-2


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


@dataclass
class CounterexampleReport:
    eta: List[float]
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def add(self, name: str, passed: bool, detail: str):
        logger.info('%s: %s (%s)', name, 'ok' if passed else 'FAILED', detail)
        self.checks.append(Check(name, bool(passed), detail))

    def to_dict(self):
        return {'eta': self.eta, 'passed': self.passed,
                'checks': [{'name': c.name, 'passed': c.passed, 'detail': c.detail} for c in self.checks]}


def counterexample_experiment(scheme: Scheme = Scheme.TELESCOPIC, **settings) -> CounterexampleReport:
    """
    Four sine oscillators with D = (1, -1, -1): the chain locks up to Γ = 1, the ring does not lock at Γ = 1.
    """
    f = CouplingFunction.sine()
    p = profile(f)
    fv = from_target_deviations(TARGET_DEVIATIONS)
    cd = cumulative_deviations(fv)
    report = CounterexampleReport(fv.eta.tolist())

    threshold = chain_threshold(p, cd)
    report.add('chain threshold', abs(threshold - 1.) <= THRESHOLD_TOL, f'Γ_C = {threshold!r}')

    state = chain_locked_state(f, p, cd, NEAR_THRESHOLD)
    error = float(np.abs(state.phi - np.array(FORCED_POINT)).max())
    report.add('chain state near threshold', error < PHASE_TOL,
               f'φ = {np.round(state.phi, 6).tolist()}, max distance to the forced point {error:.3g}')

    exists = ring_exact_solution_exists(f, cd, 1.)
    report.add('no exact ring solution', not exists, f'solution found: {exists}')

    ring_verdict = detect_lock(SystemConfig(f, fv, 1., Topology.RING, scheme, **settings))
    report.add('ring does not lock', not ring_verdict.locked,
               f'spread {ring_verdict.max_frequency_spread:.3g} at Γ = 1')

    chain_verdict = detect_lock(SystemConfig(f, fv, 0.99, Topology.CHAIN, scheme, **settings))
    report.add('chain locks below threshold', chain_verdict.locked,
               f'spread {chain_verdict.max_frequency_spread:.3g} at Γ = 0.99')

    targets = 1. * cd.d
    left_side = float(ring_equation_residual(f, targets, np.array(FORCED_POINT))[0] + targets[0])
    report.add('forced point contradicts the first ring equation', abs(left_side - targets[0]) > 0.5,
               f'f(φ_1) - f(-Σφ) = {left_side:.3g}, required {targets[0]:.3g}')

    both = [detect_lock(SystemConfig(f, fv, LOCKING_WIDTH, topology, scheme, **settings)).locked
            for topology in (Topology.CHAIN, Topology.RING)]
    report.add('both lock well below threshold', all(both), f'chain {both[0]}, ring {both[1]} at Γ = {LOCKING_WIDTH}')
    return report
