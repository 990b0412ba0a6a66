from typing import Tuple

import numpy as np

from ..coupling import CouplingFunction
from ..models import Topology


def array_edges(topology: Topology, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Nearest-neighbour edges (head, tail) = (k, k+1); a ring adds the closing edge (N, 1).
    """
    heads = np.arange(n - 1)
    tails = np.arange(1, n)
    if topology == Topology.RING:
        heads = np.append(heads, n - 1)
        tails = np.append(tails, 0)
    return heads, tails


def theta_from_phi(phi: np.ndarray) -> np.ndarray:
    """Phases with θ_1 = 0 and θ_k - θ_{k+1} = φ_k."""
    return np.concatenate([[0.], -np.cumsum(phi)])


class BaseCouplingScheme:
    """
    Every edge (i, j) with x = θ_i - θ_j adds `edge_terms(f, x)` to (θ̇_i, θ̇_j).
    """

    def edge_terms(self, f: CouplingFunction, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        raise NotImplementedError

    def edge_slopes(self, f: CouplingFunction, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        raise NotImplementedError

    def velocity(self, f: CouplingFunction, omega: np.ndarray, theta: np.ndarray,
                 heads: np.ndarray, tails: np.ndarray) -> np.ndarray:
        head_terms, tail_terms = self.edge_terms(f, theta[..., heads] - theta[..., tails])

        result = omega + np.zeros_like(theta)
        result[..., heads] += head_terms
        result[..., tails] += tail_terms
        return result

    def jacobian(self, f: CouplingFunction, theta: np.ndarray,
                 heads: np.ndarray, tails: np.ndarray) -> np.ndarray:
        n = theta.size
        head_slopes, tail_slopes = self.edge_slopes(f, theta[heads] - theta[tails])

        result = np.zeros((n, n))
        np.add.at(result, (heads, heads), head_slopes)
        np.add.at(result, (heads, tails), -head_slopes)
        np.add.at(result, (tails, heads), tail_slopes)
        np.add.at(result, (tails, tails), -tail_slopes)
        return result
