import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

__all__ = ['FrequencyVector', 'CumulativeDeviation', 'sample_uniform', 'cumulative_deviations',
           'from_target_deviations', 'read_frequencies', 'write_frequencies']

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FrequencyVector:
    eta: np.ndarray
    seed: Optional[int] = None

    def __post_init__(self):
        eta = np.array(self.eta, dtype=float).reshape(-1)
        if eta.size < 2:
            raise ValueError(f'At least two oscillators are required, got {eta.size}')
        if not np.all(np.isfinite(eta)):
            raise ValueError('Base frequencies must be finite')
        eta.setflags(write=False)
        object.__setattr__(self, 'eta', eta)

    @property
    def n(self) -> int:
        return self.eta.size

    def reversed(self) -> 'FrequencyVector':
        return FrequencyVector(self.eta[::-1], self.seed)


@dataclass(frozen=True, eq=False)
class CumulativeDeviation:
    d: np.ndarray
    d_upper: float
    d_lower: float
    eta_mean: float = 0.

    @property
    def all_zero(self) -> bool:
        return not np.any(self.d)

    def eta(self) -> np.ndarray:
        """η_k = η̄ + D_k - D_{k-1}, with D_0 = D_N = 0"""
        return self.eta_mean + np.diff(np.concatenate([[0.], self.d, [0.]]))


def sample_uniform(n: int, seed: int) -> FrequencyVector:
    if n < 2:
        raise ValueError(f'At least two oscillators are required, got {n}')
    rng = np.random.default_rng(seed)
    return FrequencyVector(rng.uniform(-1., 1., n), seed)


def cumulative_deviations(fv: FrequencyVector) -> CumulativeDeviation:
    eta = fv.eta
    if np.all(eta == eta[0]):
        mean = float(eta[0])
        centered = np.zeros_like(eta)
    else:
        mean = float(np.mean(eta))
        centered = eta - mean

    d = np.cumsum(centered)[:-1]
    d_upper = max(0., float(d.max()))
    d_lower = min(0., float(d.min()))
    return CumulativeDeviation(d, d_upper, d_lower, mean)


def from_target_deviations(d) -> FrequencyVector:
    d = np.asarray(d, dtype=float).reshape(-1)
    return FrequencyVector(np.diff(np.concatenate([[0.], d, [0.]])))


def read_frequencies(path: str) -> FrequencyVector:
    eta = np.loadtxt(path, dtype=float, ndmin=1)
    logger.info('Loaded %d base frequencies from %s', eta.size, path)
    return FrequencyVector(eta)


def write_frequencies(fv: FrequencyVector, path: str):
    header = f'eta (seed={fv.seed})' if fv.seed is not None else 'eta'
    np.savetxt(path, fv.eta, fmt='%.17g', header=header)
