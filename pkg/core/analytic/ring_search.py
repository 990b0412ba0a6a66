import itertools
import logging
import math

import numpy as np
from scipy.optimize import root

from ..coupling import CouplingFunction
from ..errors import DimensionTooLargeError
from ..frequencies import CumulativeDeviation

__all__ = ['ring_exact_solution_exists', 'ring_equation_residual', 'DEFAULT_RING_SEARCH_GRID']

logger = logging.getLogger(__name__)

DEFAULT_RING_SEARCH_GRID = 200
MAX_SEARCH_DIMENSION = 4
NEWTON_STARTS = 64
SOLUTION_TOL = 1e-8


def ring_equation_residual(f: CouplingFunction, targets: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """f(φ_k) - f(-Σφ_j) - Γ·D_k along the last axis of phi."""
    closing = np.asarray(f.value(-phi.sum(axis=-1)))[..., np.newaxis]
    return f.value(phi) - closing - targets


def ring_exact_solution_exists(f: CouplingFunction, cd: CumulativeDeviation, gamma: float,
                               grid_size: int = DEFAULT_RING_SEARCH_GRID) -> bool:
    """
    Grid search over (-π, π]^{N-1} followed by Newton polishing of the best grid points.
    """
    dimension = cd.d.size
    if dimension > MAX_SEARCH_DIMENSION:
        raise DimensionTooLargeError(f'Ring search is limited to N <= {MAX_SEARCH_DIMENSION + 1}, '
                                     f'got N = {dimension + 1}')

    targets = gamma * cd.d
    axis = -math.pi + 2. * math.pi * np.arange(1, grid_size + 1) / grid_size
    starts = _best_grid_points(f, targets, axis, dimension)

    for start in starts:
        solution = root(lambda phi: ring_equation_residual(f, targets, phi),
                        start, jac=lambda phi: _residual_jacobian(f, phi), method='hybr')
        worst = float(np.max(np.abs(ring_equation_residual(f, targets, solution.x))))
        if worst < SOLUTION_TOL:
            logger.debug('Ring solution at Γ=%.6g found from %s, residual %.3g', gamma, start, worst)
            return True

    logger.debug('No ring solution at Γ=%.6g among %d Newton starts', gamma, len(starts))
    return False


def _best_grid_points(f: CouplingFunction, targets: np.ndarray, axis: np.ndarray, dimension: int) -> np.ndarray:
    # the trailing (at most two) coordinates are meshed, the leading ones looped over
    meshed = min(dimension, 2)
    tail = np.stack(np.meshgrid(*([axis] * meshed), indexing='ij'), axis=-1).reshape(-1, meshed)

    best_points = np.empty((0, dimension))
    best_scores = np.empty(0)
    for leading in itertools.product(axis, repeat=dimension - meshed):
        block = np.hstack([np.broadcast_to(np.array(leading), (tail.shape[0], len(leading))), tail])
        scores = np.max(np.abs(ring_equation_residual(f, targets, block)), axis=-1)

        keep = min(NEWTON_STARTS, scores.size)
        chosen = np.argpartition(scores, keep - 1)[:keep]
        best_points = np.vstack([best_points, block[chosen]])
        best_scores = np.concatenate([best_scores, scores[chosen]])

        if best_scores.size > NEWTON_STARTS:
            order = np.argsort(best_scores, kind='stable')[:NEWTON_STARTS]
            best_points, best_scores = best_points[order], best_scores[order]

    return best_points[np.argsort(best_scores, kind='stable')]


def _residual_jacobian(f: CouplingFunction, phi: np.ndarray) -> np.ndarray:
    closing_slope = f.slope(-phi.sum())
    return np.diag(f.slope(phi)) + closing_slope
