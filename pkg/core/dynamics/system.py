from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..angle_util import TWO_PI, wrap_angle
from ..coupling import CouplingFunction
from ..coupling_scheme import array_edges, coupling_schemes
from ..frequencies import FrequencyVector
from ..models import Scheme, Topology

__all__ = ['SystemConfig', 'PhaseState', 'PhaseArray', 'velocity_field', 'winding_number',
           'DEFAULT_DT', 'DEFAULT_TRANSIENT_TIME', 'DEFAULT_OBSERVATION_TIME', 'DEFAULT_LOCK_TOLERANCE']

DEFAULT_DT = 0.125
DEFAULT_TRANSIENT_TIME = 2_000.
DEFAULT_OBSERVATION_TIME = 500.
DEFAULT_LOCK_TOLERANCE = 1e-3


@dataclass(frozen=True, eq=False)
class SystemConfig:
    f: CouplingFunction
    fv: FrequencyVector
    gamma: float
    topology: Topology = Topology.CHAIN
    scheme: Scheme = Scheme.TELESCOPIC
    dt: float = DEFAULT_DT
    transient_time: float = DEFAULT_TRANSIENT_TIME
    observation_time: float = DEFAULT_OBSERVATION_TIME
    lock_tolerance: float = DEFAULT_LOCK_TOLERANCE

    def __post_init__(self):
        if not self.gamma >= 0:
            raise ValueError(f'Width must be non-negative, got {self.gamma}')
        if not self.dt > 0:
            raise ValueError(f'Time step must be positive, got {self.dt}')
        if not (self.transient_time > 0 and self.observation_time > 0):
            raise ValueError(f'Transient and observation times must be positive, '
                             f'got {self.transient_time} and {self.observation_time}')
        if not self.lock_tolerance > 0:
            raise ValueError(f'Lock tolerance must be positive, got {self.lock_tolerance}')

    @property
    def n(self) -> int:
        return self.fv.n

    @property
    def natural_frequencies(self) -> np.ndarray:
        return self.gamma * self.fv.eta


@dataclass(frozen=True, eq=False)
class PhaseState:
    theta: np.ndarray
    time: float = 0.

    @classmethod
    def zeros(cls, n: int) -> 'PhaseState':
        return cls(np.zeros(n))


class PhaseArray:
    """
    B independent arrays sharing N, f, topology and scheme; omega has shape (B, N) or (N,).
    """

    def __init__(self, f: CouplingFunction, omega: np.ndarray, topology: Topology, scheme: Scheme):
        self.f = f
        self.omega = np.asarray(omega, dtype=float)
        self.topology = topology
        self.scheme = scheme
        self._coupling = coupling_schemes[scheme]
        self._heads, self._tails = array_edges(topology, self.omega.shape[-1])

    @classmethod
    def from_config(cls, cfg: SystemConfig) -> 'PhaseArray':
        return cls(cfg.f, cfg.natural_frequencies, cfg.topology, cfg.scheme)

    @classmethod
    def from_configs(cls, configs: Sequence[SystemConfig]) -> 'PhaseArray':
        first = configs[0]
        for cfg in configs[1:]:
            if (cfg.n, cfg.f, cfg.topology, cfg.scheme) != (first.n, first.f, first.topology, first.scheme):
                raise ValueError('Batched systems must share size, coupling function, topology and scheme')
        return cls(first.f, np.stack([cfg.natural_frequencies for cfg in configs]), first.topology, first.scheme)

    @property
    def n(self) -> int:
        return self.omega.shape[-1]

    def velocity(self, theta: np.ndarray) -> np.ndarray:
        return self._coupling.velocity(self.f, self.omega, theta, self._heads, self._tails)

    def edge_differences(self, theta: np.ndarray) -> np.ndarray:
        return theta[..., self._heads] - theta[..., self._tails]


def velocity_field(cfg: SystemConfig, s: PhaseState) -> np.ndarray:
    return PhaseArray.from_config(cfg).velocity(np.asarray(s.theta))


def winding_number(theta: np.ndarray, topology: Topology = Topology.RING) -> int:
    """Twist of a ring state: Σ wrap(θ_{k+1} - θ_k) around the closed ring, in turns."""
    if topology != Topology.RING:
        return 0
    steps = wrap_angle(np.diff(np.append(theta, theta[0])))
    return int(round(float(np.sum(steps)) / TWO_PI))
