import math
from typing import Callable, List, Tuple

import numpy as np
from scipy.optimize import brentq

TWO_PI = 2. * math.pi
ROOT_XTOL = 1e-12
SAME_ROOT_TOL = 1e-9


def wrap_angle(x):
    """Map x into (-π, π]."""
    wrapped = np.pi - np.mod(np.pi - np.asarray(x, dtype=float), TWO_PI)
    return float(wrapped) if np.ndim(wrapped) == 0 else wrapped


def periodic_grid(grid_size: int) -> np.ndarray:
    # one extra step on each side, so a zero sitting exactly at ±π is still bracketed
    step = TWO_PI / grid_size
    return -math.pi + step * np.arange(-1, grid_size + 2)


def sign_change_brackets(x: np.ndarray, values: np.ndarray) -> List[Tuple[float, float]]:
    signs = np.sign(values)
    change = np.nonzero((signs[:-1] * signs[1:] < 0) | (signs[:-1] == 0))[0]
    return [(float(x[i]), float(x[i + 1])) for i in change]


def refine_periodic_roots(func: Callable[[float], float], x: np.ndarray, values: np.ndarray) -> List[float]:
    roots = []
    for a, b in sign_change_brackets(x, values):
        fa = func(a)
        root = a if fa == 0 else brentq(func, a, b, xtol=ROOT_XTOL)
        roots.append(wrap_angle(root))
    return dedupe_periodic(roots)


def dedupe_periodic(angles: List[float], tol: float = SAME_ROOT_TOL) -> List[float]:
    result: List[float] = []
    for angle in sorted(angles):
        if not any(abs(wrap_angle(angle - kept)) < tol for kept in result):
            result.append(angle)
    return result
