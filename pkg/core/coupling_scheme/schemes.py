from typing import Tuple

import numpy as np

from .base import BaseCouplingScheme
from ..coupling import CouplingFunction


class TelescopicCouplingScheme(BaseCouplingScheme):

    def edge_terms(self, f: CouplingFunction, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        value = f.value(x)
        return -value, value

    def edge_slopes(self, f: CouplingFunction, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        slope = f.slope(x)
        return -slope, slope


class StandardCouplingScheme(BaseCouplingScheme):

    def edge_terms(self, f: CouplingFunction, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        return f.value(-x), f.value(x)

    def edge_slopes(self, f: CouplingFunction, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        return -f.slope(-x), f.slope(x)
