import logging
import math
from collections import defaultdict
from dataclasses import dataclass, replace
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..dynamics import SystemConfig, detect_lock_batch
from ..errors import BadBracketError

__all__ = ['ThresholdEstimate', 'bisect_threshold', 'bisect_thresholds', 'DEFAULT_REL_TOL']

logger = logging.getLogger(__name__)

DEFAULT_REL_TOL = 1e-3


@dataclass(frozen=True)
class ThresholdEstimate:
    """
    Empirical threshold of the trajectory started from θ = 0: it locked at gamma_low and failed at gamma_high.
    """
    gamma_low: float
    gamma_high: float
    iterations: int
    verdict_trace: Tuple[Tuple[float, bool], ...]

    @property
    def estimate(self) -> float:
        return 0.5 * (self.gamma_low + self.gamma_high)


def bisect_threshold(cfg: SystemConfig, bracket_high: float, rel_tol: float = DEFAULT_REL_TOL,
                     expansions: int = 0) -> ThresholdEstimate:
    return bisect_thresholds([cfg], [bracket_high], rel_tol, expansions)[0]


def bisect_thresholds(configs: Sequence[SystemConfig], bracket_highs: Sequence[float],
                      rel_tol: float = DEFAULT_REL_TOL, expansions: int = 0) -> List[ThresholdEstimate]:
    """
    Bisects all systems in lock-step; each round integrates one batch per group of systems sharing N, f,
    topology, scheme and detection settings. Γ = 0 is taken as locked.

    A system that still locks at its upper bracket has the bracket doubled, at most `expansions` times,
    before BadBracketError is raised.
    """
    if not 0 < rel_tol < 1:
        raise ValueError(f'Relative tolerance must lie in (0, 1), got {rel_tol}')
    if len(configs) != len(bracket_highs):
        raise ValueError(f'Got {len(configs)} systems but {len(bracket_highs)} brackets')
    for high in bracket_highs:
        if not (math.isfinite(high) and high > 0):
            raise ValueError(f'Upper bracket must be positive and finite, got {high}')

    low = np.zeros(len(configs))
    high = np.array(bracket_highs, dtype=float)
    traces: List[List[Tuple[float, bool]]] = [[] for _ in configs]
    iterations = np.zeros(len(configs), dtype=int)

    def probe(indices: List[int], gammas: np.ndarray) -> List[bool]:
        groups: Dict[Tuple, List[int]] = defaultdict(list)
        for position, i in enumerate(indices):
            groups[_batch_key(configs[i])].append(position)

        results = [False] * len(indices)
        for positions in groups.values():
            batch = [replace(configs[indices[p]], gamma=float(gammas[p])) for p in positions]
            verdicts, _ = detect_lock_batch(batch)
            for p, verdict in zip(positions, verdicts):
                i, g = indices[p], float(gammas[p])
                traces[i].append((g, verdict.locked))
                iterations[i] += 1
                results[p] = verdict.locked
                logger.debug('From Γ=%.9g locked=%s (spread %.3g)', g, verdict.locked, verdict.max_frequency_spread)
        return results

    pending = list(range(len(configs)))
    for expansion in range(expansions + 1):
        locked = [i for i, ok in zip(pending, probe(pending, high[pending])) if ok]
        if not locked:
            break
        if expansion == expansions:
            raise BadBracketError(f'{len(locked)} system(s) lock at their upper bracket, '
                                  f'e.g. Γ={high[locked[0]]!r}')
        logger.warning('%d system(s) lock at their upper bracket; doubling it', len(locked))
        low[locked] = high[locked]
        high[locked] *= 2.
        pending = locked

    while True:
        active = [i for i in range(len(configs)) if (high[i] - low[i]) / high[i] >= rel_tol]
        if not active:
            break
        middle = 0.5 * (low[active] + high[active])
        for i, g, ok in zip(active, middle, probe(active, middle)):
            if ok:
                low[i] = g
            else:
                high[i] = g

    return [ThresholdEstimate(float(low[i]), float(high[i]), int(iterations[i]), tuple(traces[i]))
            for i in range(len(configs))]


def _batch_key(cfg: SystemConfig) -> Tuple:
    # systems integrated together must agree on everything but their frequencies
    return (cfg.n, cfg.f, cfg.topology, cfg.scheme, cfg.dt, cfg.transient_time, cfg.observation_time,
            cfg.lock_tolerance)
