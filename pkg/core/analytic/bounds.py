import math

from ..coupling import CouplingProfile
from ..frequencies import CumulativeDeviation

__all__ = ['chain_threshold', 'ring_upper_bound', 'ratio_upper_bound']


def _divide(numerator: float, denominator: float) -> float:
    # 1/0 is taken as +inf: a side without deviations never limits locking
    return math.inf if denominator == 0 else numerator / denominator


def chain_threshold(p: CouplingProfile, cd: CumulativeDeviation) -> float:
    return min(_divide(p.f_upper, cd.d_upper), _divide(p.f_lower, cd.d_lower))


def ring_upper_bound(p: CouplingProfile, cd: CumulativeDeviation) -> float:
    spread = p.f_upper - p.f_lower
    return min(_divide(spread, cd.d_upper), _divide(-spread, cd.d_lower))


def ratio_upper_bound(p: CouplingProfile) -> float:
    return 1. + max(abs(p.f_lower / p.f_upper), abs(p.f_upper / p.f_lower))
