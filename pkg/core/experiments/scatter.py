import logging
from typing import Dict, List, Tuple

import numpy as np
import pandas as pd

from ..coupling import CouplingFunction, profile
from ..frequencies import sample_uniform
from ..models import Scheme
from ..thresholds import DEFAULT_REL_TOL, matched_pairs

__all__ = ['scatter_experiment', 'DEFAULT_TRIALS', 'RATIO_SLACK']

logger = logging.getLogger(__name__)

DEFAULT_TRIALS = 200
DEFAULT_BATCH_SIZE = 50
RATIO_SLACK = 0.05

COLUMNS = ['seed', 'n', 'f', 'scheme', 'gamma_chain', 'gamma_ring', 'analytic_chain', 'ring_bound', 'ratio']


def _get_all_stats(ratios: np.ndarray, bound: float) -> Dict:
    return {
        'max_ratio': float(ratios.max()),
        'min_ratio': float(ratios.min()),
        'fraction_below_one': float(np.mean(ratios < 1.)),
        'ratio_bound': bound,
        'violations': int(np.sum(ratios > bound + RATIO_SLACK)),
    }


def scatter_experiment(f: CouplingFunction, scheme: Scheme, n: int, trials: int = DEFAULT_TRIALS, seed0: int = 0,
                       rel_tol: float = DEFAULT_REL_TOL, batch_size: int = DEFAULT_BATCH_SIZE,
                       **settings) -> Tuple[pd.DataFrame, Dict]:
    """
    Matched chain/ring thresholds for `trials` frequency vectors drawn with seeds seed0, seed0 + 1, ...
    Returns the per-trial table and a summary of the ratios.
    """
    if trials < 1:
        raise ValueError(f'At least one trial is required, got {trials}')
    p = profile(f)

    rows: List[Dict] = []
    for start in range(0, trials, batch_size):
        seeds = list(range(seed0 + start, seed0 + min(start + batch_size, trials)))
        logger.info('Trials %d-%d of %d...', start + 1, start + len(seeds), trials)
        pairs = matched_pairs(f, [sample_uniform(n, seed) for seed in seeds], scheme, rel_tol, p, **settings)
        for seed, pair in zip(seeds, pairs):
            rows.append({
                'seed': seed,
                'n': n,
                'f': f.spec or str(f),
                'scheme': scheme.value,
                'gamma_chain': pair.chain.estimate,
                'gamma_ring': pair.ring.estimate,
                'analytic_chain': pair.analytic_chain,
                'ring_bound': pair.ring_bound,
                'ratio': pair.ratio,
            })

    table = pd.DataFrame(rows, columns=COLUMNS)
    summary = _get_all_stats(table['ratio'].to_numpy(), pairs[0].ratio_bound)
    logger.info('Max ratio %.4f (bound %.4f), %.1f%% below one',
                summary['max_ratio'], summary['ratio_bound'], 100 * summary['fraction_below_one'])
    return table, summary
