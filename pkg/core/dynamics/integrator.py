import logging
from typing import Callable, Iterator, Tuple

import numpy as np
import pandas as pd

from .system import PhaseArray, PhaseState, SystemConfig
from ..errors import NonFiniteStateError

__all__ = ['rk4_step', 'step_sizes', 'advance', 'integrate', 'trajectory']

logger = logging.getLogger(__name__)

# a trailing step shorter than this fraction of dt is dropped
STEP_REMAINDER_TOL = 1e-9

Field = Callable[[np.ndarray], np.ndarray]


def rk4_step(field: Field, theta: np.ndarray, h: float) -> Tuple[np.ndarray, np.ndarray]:
    """Classical fourth-order Runge-Kutta step; also returns k1 = θ̇(θ)."""
    k1 = field(theta)
    k2 = field(theta + 0.5 * h * k1)
    k3 = field(theta + 0.5 * h * k2)
    k4 = field(theta + h * k3)
    return theta + h / 6. * (k1 + 2. * k2 + 2. * k3 + k4), k1


def step_sizes(duration: float, dt: float) -> Iterator[float]:
    """Full steps of dt, then one shortened step landing exactly on duration."""
    if duration < 0:
        raise ValueError(f'Duration must be non-negative, got {duration}')
    steps = int(duration // dt)
    for _ in range(steps):
        yield dt
    remainder = duration - steps * dt
    if remainder > STEP_REMAINDER_TOL * dt:
        yield remainder


def advance(array: PhaseArray, theta: np.ndarray, duration: float, dt: float) -> np.ndarray:
    theta = np.array(theta, dtype=float)
    for h in step_sizes(duration, dt):
        theta, _ = rk4_step(array.velocity, theta, h)
    check_finite(theta)
    return theta


def check_finite(theta: np.ndarray):
    if not np.all(np.isfinite(theta)):
        raise NonFiniteStateError('Integration produced non-finite phases')


def integrate(cfg: SystemConfig, s0: PhaseState, duration: float) -> PhaseState:
    array = PhaseArray.from_config(cfg)
    theta = advance(array, s0.theta, duration, cfg.dt)
    return PhaseState(theta, s0.time + duration)


def trajectory(cfg: SystemConfig, s0: PhaseState, duration: float, stride: int = 1) -> pd.DataFrame:
    """
    Phases sampled every `stride` steps, including both ends; columns time, theta_1 .. theta_N.
    """
    if stride < 1:
        raise ValueError(f'Stride must be positive, got {stride}')

    array = PhaseArray.from_config(cfg)
    theta = np.array(s0.theta, dtype=float)
    time = s0.time
    times, rows = [time], [theta]
    step = 0
    for h in step_sizes(duration, cfg.dt):
        theta, _ = rk4_step(array.velocity, theta, h)
        time += h
        step += 1
        if step % stride == 0:
            times.append(time)
            rows.append(theta)
    if times[-1] != time:
        times.append(time)
        rows.append(theta)
    check_finite(theta)

    logger.debug('Recorded %d samples over %.6g time units', len(times), duration)
    table = pd.DataFrame(np.array(rows), columns=[f'theta_{k + 1}' for k in range(cfg.n)])
    table.insert(0, 'time', times)
    return table
