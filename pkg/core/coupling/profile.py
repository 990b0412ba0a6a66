import logging
import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
import pandas as pd
from scipy.optimize import brentq

from .coupling_function import CouplingFunction
from ..angle_util import periodic_grid, refine_periodic_roots, wrap_angle
from ..errors import ConstantFunctionError, NoZeroCrossingError, OutOfRangeError

__all__ = ['CouplingProfile', 'profile', 'invert_on_lambda', 'invert_on_lambda_array', 'lambda_table',
           'DEFAULT_GRID_SIZE']

logger = logging.getLogger(__name__)

DEFAULT_GRID_SIZE = 100_000
COVERAGE_TOL = 1e-9
ENDPOINT_TOL = 1e-12
INVERSION_XTOL = 1e-14
BISECTION_STEPS = 64

Interval = Tuple[float, float]


@dataclass(frozen=True)
class CouplingProfile:
    f_upper: float
    f_lower: float
    max_abs_derivative: float
    positive_slope_zero: float
    lambda_branches: Tuple[Interval, ...]


def profile(f: CouplingFunction, grid_size: int = DEFAULT_GRID_SIZE) -> CouplingProfile:
    if f.is_constant:
        raise ConstantFunctionError(f'Coupling function {f} is constant')
    if grid_size < 8:
        raise ValueError(f'Grid size must be at least 8, got {grid_size}')

    x = periodic_grid(grid_size)
    values = f.value(x)
    slopes = f.slope(x)

    critical_points = refine_periodic_roots(f.slope, x, slopes)
    critical_values = np.array([f.value(c) for c in critical_points] + [values.max(), values.min()])
    f_upper = float(critical_values.max())
    f_lower = float(critical_values.min())

    inflections = refine_periodic_roots(f.curvature, x, f.curvature(x))
    max_abs_derivative = float(max([abs(f.slope(p)) for p in inflections] + [np.abs(slopes).max()]))

    if not f_lower < 0 < f_upper:
        raise NoZeroCrossingError(f'Coupling function {f} does not cross zero: '
                                  f'min {f_lower:.6g}, max {f_upper:.6g}')

    zeros = [z for z in refine_periodic_roots(f.value, x, values) if f.slope(z) > 0]
    if not zeros:
        raise NoZeroCrossingError(f'Coupling function {f} has no zero with positive slope')

    branches = _lambda_branches(f, critical_points, f_lower, f_upper)
    logger.debug('Profile of %s: max %.6g, min %.6g, |f\'| <= %.6g, x0 = %.6g, %d branch(es)',
                 f, f_upper, f_lower, max_abs_derivative, zeros[0], len(branches))

    return CouplingProfile(f_upper, f_lower, max_abs_derivative, zeros[0], tuple(branches))


def invert_on_lambda(p: CouplingProfile, f: CouplingFunction, y: float) -> float:
    if not p.f_lower < y < p.f_upper:
        raise OutOfRangeError(f'{y!r} is outside of ({p.f_lower!r}, {p.f_upper!r})')

    for a, b in p.lambda_branches:
        lo, hi = f.value(a), f.value(b)
        # branches closed at ±π end there with positive slope
        if abs(y - lo) <= ENDPOINT_TOL and f.slope(a) > 0:
            return wrap_angle(a)
        if abs(y - hi) <= ENDPOINT_TOL and f.slope(b) > 0:
            return wrap_angle(b)
        if lo < y < hi:
            return wrap_angle(brentq(lambda x: f.value(x) - y, a, b, xtol=INVERSION_XTOL))

    raise OutOfRangeError(f'{y!r} is not covered by any branch of Λ')


def invert_on_lambda_array(p: CouplingProfile, f: CouplingFunction, ys) -> np.ndarray:
    """
    Vectorized invert_on_lambda, bisecting inside the selected branch; NaN where y is out of range.
    """
    ys = np.asarray(ys, dtype=float)
    lo_x = np.full(ys.shape, np.nan)
    hi_x = np.full(ys.shape, np.nan)
    pending = (ys > p.f_lower) & (ys < p.f_upper)

    for a, b in p.lambda_branches:
        lo, hi = f.value(a), f.value(b)
        at_start = pending & (np.abs(ys - lo) <= ENDPOINT_TOL) & (f.slope(a) > 0)
        at_end = pending & ~at_start & (np.abs(ys - hi) <= ENDPOINT_TOL) & (f.slope(b) > 0)
        inside = pending & ~at_start & ~at_end & (ys > lo) & (ys < hi)

        lo_x[at_start], hi_x[at_start] = a, a
        lo_x[at_end], hi_x[at_end] = b, b
        lo_x[inside], hi_x[inside] = a, b
        pending &= ~(at_start | at_end | inside)

    found = ~np.isnan(lo_x)
    lo_x, hi_x, targets = lo_x[found], hi_x[found], ys[found]
    for _ in range(BISECTION_STEPS):
        mid = 0.5 * (lo_x + hi_x)
        below = f.value(mid) < targets
        lo_x = np.where(below, mid, lo_x)
        hi_x = np.where(below, hi_x, mid)

    result = np.full(ys.shape, np.nan)
    result[found] = wrap_angle(0.5 * (lo_x + hi_x))
    return result


def lambda_table(f: CouplingFunction, p: CouplingProfile, samples: int = 2_000) -> pd.DataFrame:
    x = np.linspace(-math.pi, math.pi, samples + 1)[1:]
    in_lambda = np.zeros_like(x, dtype=bool)
    for a, b in p.lambda_branches:
        in_lambda |= (x > a) & (x < b)
    return pd.DataFrame({'x': x, 'f': f.value(x), 'slope': f.slope(x), 'in_lambda': in_lambda.astype(int)})


def _lambda_branches(f: CouplingFunction, critical_points: List[float],
                     f_lower: float, f_upper: float) -> List[Interval]:
    edges = sorted({-math.pi, math.pi, *critical_points})
    increasing = [(a, b) for a, b in zip(edges, edges[1:])
                  if b - a > COVERAGE_TOL and f.slope(0.5 * (a + b)) > 0]

    selected: List[Interval] = []
    for branch in increasing:
        selected.append(branch)
        if _covers([(f.value(a), f.value(b)) for a, b in selected], f_lower, f_upper):
            return selected

    logger.warning('Increasing branches of %s do not cover (%.6g, %.6g); keeping all of them',
                   f, f_lower, f_upper)
    return increasing


def _covers(images: List[Interval], lo: float, hi: float) -> bool:
    reached = lo
    for a, b in sorted(images):
        if a > reached + COVERAGE_TOL:
            return False
        reached = max(reached, b)
    return reached >= hi - COVERAGE_TOL
