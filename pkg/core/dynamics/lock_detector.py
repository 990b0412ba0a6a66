import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .integrator import advance, check_finite, rk4_step, step_sizes
from .system import PhaseArray, PhaseState, SystemConfig

__all__ = ['LockVerdict', 'detect_lock', 'detect_lock_batch', 'observe_lock', 'settle', 'DEFAULT_MAX_TRANSIENT']

logger = logging.getLogger(__name__)

DEFAULT_MAX_TRANSIENT = 1e6


@dataclass(frozen=True)
class LockVerdict:
    locked: bool
    max_frequency_spread: float
    omega_hat: float
    max_phase_drift: float = 0.


def detect_lock(cfg: SystemConfig, s0: Optional[PhaseState] = None) -> LockVerdict:
    verdict, _ = observe_lock(cfg, s0)
    return verdict


def observe_lock(cfg: SystemConfig, s0: Optional[PhaseState] = None) -> Tuple[LockVerdict, PhaseState]:
    """detect_lock that also returns the state at the end of the observation window."""
    s0 = s0 or PhaseState.zeros(cfg.n)
    verdicts, theta = detect_lock_batch([cfg], np.asarray(s0.theta)[np.newaxis, :])
    return verdicts[0], PhaseState(theta[0], s0.time + cfg.transient_time + cfg.observation_time)


def detect_lock_batch(configs: Sequence[SystemConfig],
                      theta0: Optional[np.ndarray] = None) -> Tuple[List[LockVerdict], np.ndarray]:
    """
    Runs the transient, then samples θ̇ at every step of the observation window.

    A system is locked when every sampled frequency lies within the tolerance of the sample mean
    and every edge phase difference drifts by less than the tolerance over the window.
    """
    first = configs[0]
    for cfg in configs[1:]:
        if (cfg.dt, cfg.transient_time, cfg.observation_time, cfg.lock_tolerance) != \
                (first.dt, first.transient_time, first.observation_time, first.lock_tolerance):
            raise ValueError('Batched systems must share integration and detection settings')

    array = PhaseArray.from_configs(configs)
    theta = np.zeros((len(configs), first.n)) if theta0 is None else np.array(theta0, dtype=float)
    theta = advance(array, theta, first.transient_time, first.dt)

    spread = np.zeros(len(configs))
    omega_sum = np.zeros(len(configs))
    samples = 0
    low = high = array.edge_differences(theta)
    for h in step_sizes(first.observation_time, first.dt):
        theta, k1 = rk4_step(array.velocity, theta, h)
        mean = k1.mean(axis=-1)
        spread = np.maximum(spread, np.abs(k1 - mean[:, np.newaxis]).max(axis=-1))
        omega_sum += mean
        samples += 1

        differences = array.edge_differences(theta)
        low = np.minimum(low, differences)
        high = np.maximum(high, differences)
    check_finite(theta)

    drift = (high - low).max(axis=-1)
    tolerance = first.lock_tolerance
    verdicts = [LockVerdict(bool(s < tolerance and d < tolerance), float(s), float(w / samples), float(d))
                for s, d, w in zip(spread, drift, omega_sum)]
    logger.debug('Observed %d system(s): %d locked', len(verdicts), sum(v.locked for v in verdicts))
    return verdicts, theta


def settle(cfg: SystemConfig, s0: Optional[PhaseState] = None,
           max_transient: float = DEFAULT_MAX_TRANSIENT) -> Tuple[LockVerdict, PhaseState]:
    """
    Repeats transient and observation windows until the system locks or max_transient time has elapsed.
    """
    state = s0 or PhaseState.zeros(cfg.n)
    elapsed = 0.
    while True:
        verdict, state = observe_lock(cfg, state)
        elapsed += cfg.transient_time + cfg.observation_time
        if verdict.locked or elapsed >= max_transient:
            break
        logger.debug('Not settled after %.6g time units (spread %.3g)', elapsed, verdict.max_frequency_spread)

    logger.info('Settled=%s after %.6g time units: spread %.3g, Ω̂ = %.9g',
                verdict.locked, elapsed, verdict.max_frequency_spread, verdict.omega_hat)
    return verdict, state
