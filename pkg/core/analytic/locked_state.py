import logging
from dataclasses import replace
from typing import List, Tuple

import numpy as np
from scipy.optimize import brentq

from .bounds import chain_threshold
from .stability import check_stability
from .states import LockedState
from ..angle_util import wrap_angle
from ..coupling import CouplingFunction, CouplingProfile, invert_on_lambda_array
from ..coupling_scheme import array_edges, coupling_schemes
from ..errors import AboveThresholdError, NoSolutionError
from ..frequencies import CumulativeDeviation, FrequencyVector
from ..models import Scheme, Topology

__all__ = ['chain_locked_state', 'standard_chain_locked_state', 'chain_residual', 'standard_chain_residual']

logger = logging.getLogger(__name__)

STANDARD_SCAN_POINTS = 2_001
STANDARD_RESIDUAL_TOL = 1e-8
OMEGA_XTOL = 1e-14


def chain_locked_state(f: CouplingFunction, p: CouplingProfile, cd: CumulativeDeviation, gamma: float) -> LockedState:
    if gamma < 0:
        raise ValueError(f'Width must be non-negative, got {gamma}')
    threshold = chain_threshold(p, cd)
    if gamma >= threshold:
        raise AboveThresholdError(f'No locked chain state exists for Γ={gamma!r} >= Γ_C={threshold!r}')

    phi = invert_on_lambda_array(p, f, gamma * cd.d)
    state = LockedState(phi, float(gamma), float(gamma * cd.eta_mean), Topology.CHAIN, Scheme.TELESCOPIC,
                        stable=False, eta=cd.eta())

    worst = float(np.max(chain_residual(state, f, cd), initial=0.))
    if worst > 1e-9:
        logger.warning('Chain state at Γ=%.6g has residual %.3g', gamma, worst)
    return replace(state, stable=check_stability(state, f))


def chain_residual(state: LockedState, f: CouplingFunction, cd: CumulativeDeviation) -> np.ndarray:
    return np.abs(f.value(state.phi) - state.gamma * cd.d)


def standard_chain_locked_state(f: CouplingFunction, p: CouplingProfile, fv: FrequencyVector,
                                gamma: float) -> LockedState:
    """
    Locked state of the standard-coupling chain, built by the forward recursion

        f(-φ_1) = Ω - ω_1,   f(-φ_k) = Ω - ω_k - f(φ_{k-1}),   closed by f(φ_{N-1}) = Ω - ω_N,

    with every -φ_k taken from Λ. Ω is scanned over the range where the recursion can close
    and each sign change of the closure residual is refined with brentq.
    """
    if gamma < 0:
        raise ValueError(f'Width must be non-negative, got {gamma}')
    omega = gamma * fv.eta
    reach = abs(p.f_lower) + abs(p.f_upper)
    scan = np.linspace(omega.min() - reach, omega.max() + reach, STANDARD_SCAN_POINTS)
    _, closure = _standard_recursion(f, p, omega, scan)

    candidates: List[LockedState] = []
    for big_omega in _closure_roots(f, p, omega, scan, closure):
        phi, _ = _standard_recursion(f, p, omega, np.array([big_omega]))
        state = LockedState(phi[0], float(gamma), float(big_omega), Topology.CHAIN, Scheme.STANDARD,
                            stable=False, eta=fv.eta)
        worst = float(np.max(standard_chain_residual(state, f)))
        if worst < STANDARD_RESIDUAL_TOL:
            candidates.append(replace(state, stable=check_stability(state, f)))
        else:
            logger.debug('Rejected Ω=%.12g with residual %.3g', big_omega, worst)

    if not candidates:
        raise NoSolutionError(f'Standard chain recursion does not close for Γ={gamma!r}')

    mean_omega = float(np.mean(omega))
    best = min(candidates, key=lambda s: (not s.stable, abs(s.omega - mean_omega)))
    logger.debug('Standard chain at Γ=%.6g: %d closing Ω value(s), picked Ω=%.12g (stable=%s)',
                 gamma, len(candidates), best.omega, best.stable)
    return best


def standard_chain_residual(state: LockedState, f: CouplingFunction) -> np.ndarray:
    heads, tails = array_edges(Topology.CHAIN, state.n)
    velocity = coupling_schemes[Scheme.STANDARD].velocity(f, state.natural_frequencies, state.theta(), heads, tails)
    return np.abs(velocity - state.omega)


def _standard_recursion(f: CouplingFunction, p: CouplingProfile, omega: np.ndarray,
                        big_omegas: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    phi = np.empty((big_omegas.size, omega.size - 1))
    carry = np.zeros(big_omegas.size)
    for k in range(omega.size - 1):
        phi[:, k] = wrap_angle(-invert_on_lambda_array(p, f, big_omegas - omega[k] - carry))
        carry = f.value(phi[:, k])
    return phi, carry - (big_omegas - omega[-1])


def _closure_roots(f: CouplingFunction, p: CouplingProfile, omega: np.ndarray,
                   scan: np.ndarray, closure: np.ndarray) -> List[float]:
    def residual(big_omega: float) -> float:
        return float(_standard_recursion(f, p, omega, np.array([big_omega]))[1][0])

    roots = []
    for i in range(scan.size - 1):
        left, right = closure[i], closure[i + 1]
        if not (np.isfinite(left) and np.isfinite(right)):
            continue
        if left == 0:
            roots.append(float(scan[i]))
        elif left * right < 0:
            try:
                roots.append(brentq(residual, scan[i], scan[i + 1], xtol=OMEGA_XTOL))
            except (ValueError, RuntimeError):
                # the recursion left (f_l, f_u) somewhere inside the bracket
                continue
    return roots
