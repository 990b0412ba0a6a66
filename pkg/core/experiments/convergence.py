import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from scipy.stats import linregress

from ..analytic import (chain_locked_state, chain_threshold, ring_approximate_state,
                        ring_standard_approximate_state, standard_chain_locked_state)
from ..angle_util import wrap_angle
from ..coupling import CouplingFunction, profile
from ..dynamics import DEFAULT_DT, DEFAULT_MAX_TRANSIENT, DEFAULT_TRANSIENT_TIME, PhaseState, SystemConfig, settle
from ..errors import LockingError, NotLockedError
from ..frequencies import cumulative_deviations, sample_uniform
from ..models import Scheme, Topology

__all__ = ['convergence_experiment', 'analytic_convergence_experiment', 'fit_log_slope',
           'DEFAULT_GAMMA_FRACTION', 'DEFAULT_N_VALUES', 'CONVERGENCE_OBSERVATION_TIME']

logger = logging.getLogger(__name__)

DEFAULT_GAMMA_FRACTION = 0.5
DEFAULT_N_VALUES = (8, 16, 32, 64, 128)
CONVERGENCE_LOCK_TOLERANCE = 1e-8
CONVERGENCE_OBSERVATION_TIME = 1_000.
# keeps seeds of different realizations apart for every N
REALIZATION_SEED_STRIDE = 1_000_000


def realization_seed(seed: int, n: int, realization: int) -> int:
    return seed + n + realization * REALIZATION_SEED_STRIDE


def fit_log_slope(table: pd.DataFrame, column: str) -> Optional[float]:
    """Least-squares slope of log(mean column) against log N; None with fewer than two usable N."""
    means = table.groupby('n')[column].mean()
    means = means[np.isfinite(means) & (means > 0)]
    if len(means) < 2:
        return None
    return float(linregress(np.log(means.index.to_numpy(dtype=float)), np.log(means.to_numpy())).slope)


def convergence_experiment(f: CouplingFunction, gamma_fraction: float = DEFAULT_GAMMA_FRACTION,
                           n_values: Sequence[int] = DEFAULT_N_VALUES, seed: int = 0, realizations: int = 1,
                           dt: float = DEFAULT_DT, transient_time: float = DEFAULT_TRANSIENT_TIME,
                           observation_time: float = CONVERGENCE_OBSERVATION_TIME,
                           lock_tolerance: float = CONVERGENCE_LOCK_TOLERANCE,
                           max_transient: float = DEFAULT_MAX_TRANSIENT) -> Tuple[pd.DataFrame, Optional[float]]:
    """
    Settles the chain from θ = 0 at Γ = gamma_fraction·Γ_C, then settles the ring from the chain's final
    state and records ‖φ_chain - φ_ring‖∞ over the chain's N - 1 differences.
    """
    _check_fraction(gamma_fraction)
    p = profile(f)

    rows: List[Dict] = []
    for n in n_values:
        for realization in range(realizations):
            draw_seed = realization_seed(seed, n, realization)
            fv = sample_uniform(n, draw_seed)
            gamma = gamma_fraction * chain_threshold(p, cumulative_deviations(fv))
            logger.info('Settling chain and ring of %d oscillators at Γ=%.6g (seed %d)...', n, gamma, draw_seed)

            chain_cfg = SystemConfig(f, fv, gamma, Topology.CHAIN, Scheme.TELESCOPIC, dt, transient_time,
                                     observation_time, lock_tolerance)
            chain_verdict, chain_state = settle(chain_cfg, PhaseState.zeros(n), max_transient)
            if not chain_verdict.locked:
                raise NotLockedError(f'Chain of {n} oscillators did not lock at Γ={gamma!r}')

            ring_cfg = SystemConfig(f, fv, gamma, Topology.RING, Scheme.TELESCOPIC, dt, transient_time,
                                    observation_time, lock_tolerance)
            ring_verdict, ring_state = settle(ring_cfg, PhaseState(chain_state.theta), max_transient)
            if not ring_verdict.locked:
                raise NotLockedError(f'Ring of {n} oscillators did not lock at Γ={gamma!r}')

            separation = np.abs(wrap_angle(np.diff(ring_state.theta) - np.diff(chain_state.theta))).max()
            rows.append({'n': n, 'realization': realization, 'seed': draw_seed, 'separation': float(separation),
                         'gamma': gamma, 'omega_chain': chain_verdict.omega_hat,
                         'omega_ring': ring_verdict.omega_hat})

    table = pd.DataFrame(rows, columns=['n', 'realization', 'seed', 'separation', 'gamma',
                                        'omega_chain', 'omega_ring'])
    slope = fit_log_slope(table, 'separation')
    if slope is not None:
        logger.info('Separation decays with log-log slope %.3f', slope)
    return table, slope


def analytic_convergence_experiment(f: CouplingFunction, gamma_fraction: float = DEFAULT_GAMMA_FRACTION,
                                    n_values: Sequence[int] = DEFAULT_N_VALUES, seed: int = 0,
                                    realizations: int = 1,
                                    scheme: Scheme = Scheme.TELESCOPIC) -> Tuple[pd.DataFrame, Dict]:
    """
    Same protocol with the constructed chain state and its shifted ring approximation instead of simulation.
    Realizations without a standard-coupling chain state are skipped.
    """
    _check_fraction(gamma_fraction)
    p = profile(f)

    rows: List[Dict] = []
    for n in n_values:
        for realization in range(realizations):
            draw_seed = realization_seed(seed, n, realization)
            fv = sample_uniform(n, draw_seed)
            cd = cumulative_deviations(fv)
            gamma = gamma_fraction * chain_threshold(p, cd)
            try:
                if scheme == Scheme.TELESCOPIC:
                    approximation = ring_approximate_state(f, p, chain_locked_state(f, p, cd, gamma))
                else:
                    approximation = ring_standard_approximate_state(f, p,
                                                                    standard_chain_locked_state(f, p, fv, gamma))
            except LockingError as e:
                logger.warning('Skipping N=%d seed %d: %s', n, draw_seed, e)
                continue

            residual = float(approximation.residual.max())
            shift = abs(approximation.psi + approximation.x0)
            rows.append({'n': n, 'realization': realization, 'seed': draw_seed, 'residual': residual,
                         'shift': shift, 'normalized_residual': residual / shift if shift > 0 else np.nan,
                         'bound': approximation.residual_bound,
                         'within_bound': bool(residual <= approximation.residual_bound),
                         'stable': approximation.stable})

    table = pd.DataFrame(rows, columns=['n', 'realization', 'seed', 'residual', 'shift', 'normalized_residual',
                                        'bound', 'within_bound', 'stable'])
    slopes = {'residual': fit_log_slope(table, 'residual'),
              'normalized_residual': fit_log_slope(table, 'normalized_residual')}
    logger.info('Ring approximation residual slopes: %s', slopes)
    return table, slopes


def _check_fraction(gamma_fraction: float):
    if not 0 < gamma_fraction < 1:
        raise ValueError(f'Width fraction must lie in (0, 1), got {gamma_fraction}')
