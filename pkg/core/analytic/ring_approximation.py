import logging
import math

import numpy as np

from .stability import check_stability
from .states import LockedState, RingApproximation
from ..angle_util import TWO_PI
from ..coupling import CouplingFunction, CouplingProfile
from ..coupling_scheme import array_edges, coupling_schemes, theta_from_phi
from ..errors import NoSymmetricZeroError
from ..frequencies import FrequencyVector, cumulative_deviations
from ..models import Scheme, Topology

__all__ = ['ring_approximate_state', 'ring_standard_approximate_state', 'symmetric_zero']

logger = logging.getLogger(__name__)

CLOSING_TOL = 1e-9
SYMMETRIC_ZERO_TOL = 1e-12


def ring_approximate_state(f: CouplingFunction, p: CouplingProfile, chain_state: LockedState) -> RingApproximation:
    phi_ring, psi, shift = _shift_chain(chain_state, p.positive_slope_zero)

    closing = f.value(-phi_ring.sum())
    if abs(closing) > CLOSING_TOL:
        logger.warning('Closing edge of the ring approximation is off zero by %.3g', closing)

    targets = chain_state.gamma * cumulative_deviations(FrequencyVector(chain_state.eta)).d
    residual = np.abs(f.value(phi_ring) - closing - targets)
    bound = p.max_abs_derivative * abs(shift)

    return RingApproximation(phi_ring, psi, p.positive_slope_zero, residual, bound, Scheme.TELESCOPIC,
                             stable=_ring_is_stable(f, chain_state, phi_ring, Scheme.TELESCOPIC))


def ring_standard_approximate_state(f: CouplingFunction, p: CouplingProfile,
                                    chain_state: LockedState) -> RingApproximation:
    """
    Residuals are those of all N standard ring equations; interior equations carry two shifted
    terms, hence the factor 2 in the bound.
    """
    x0 = symmetric_zero(f)
    phi_ring, psi, shift = _shift_chain(chain_state, x0)

    heads, tails = array_edges(Topology.RING, chain_state.n)
    velocity = coupling_schemes[Scheme.STANDARD].velocity(f, chain_state.natural_frequencies,
                                                          theta_from_phi(phi_ring), heads, tails)
    residual = np.abs(velocity - chain_state.omega)
    bound = 2. * p.max_abs_derivative * abs(shift)

    return RingApproximation(phi_ring, psi, x0, residual, bound, Scheme.STANDARD,
                             stable=_ring_is_stable(f, chain_state, phi_ring, Scheme.STANDARD))


def symmetric_zero(f: CouplingFunction) -> float:
    for x0 in (0., math.pi):
        if abs(f.value(x0)) < SYMMETRIC_ZERO_TOL and f.slope(x0) > 0:
            return x0
    raise NoSymmetricZeroError(f'Neither 0 nor π is a zero of {f} with positive slope')


def _shift_chain(chain_state: LockedState, x0: float):
    psi = float(np.mod(chain_state.phi.sum(), TWO_PI))
    if psi >= TWO_PI:
        psi = 0.
    shift = (x0 + psi) / (chain_state.n - 1)
    return chain_state.phi - shift, psi, shift


def _ring_is_stable(f: CouplingFunction, chain_state: LockedState, phi_ring: np.ndarray, scheme: Scheme) -> bool:
    ring_state = LockedState(phi_ring, chain_state.gamma, chain_state.omega, Topology.RING, scheme,
                             stable=False, eta=chain_state.eta)
    return check_stability(ring_state, f)
