from dataclasses import dataclass

import numpy as np

from ..coupling_scheme import theta_from_phi
from ..models import Topology, Scheme

__all__ = ['LockedState', 'RingApproximation']


@dataclass(frozen=True, eq=False)
class LockedState:
    phi: np.ndarray
    gamma: float
    omega: float
    topology: Topology
    scheme: Scheme
    stable: bool
    eta: np.ndarray

    @property
    def n(self) -> int:
        return self.eta.size

    @property
    def natural_frequencies(self) -> np.ndarray:
        return self.gamma * self.eta

    def theta(self) -> np.ndarray:
        return theta_from_phi(self.phi)


@dataclass(frozen=True, eq=False)
class RingApproximation:
    phi_ring: np.ndarray
    psi: float
    x0: float
    residual: np.ndarray
    residual_bound: float
    scheme: Scheme
    stable: bool
