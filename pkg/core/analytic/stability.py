import numpy as np

from .states import LockedState
from ..coupling import CouplingFunction
from ..coupling_scheme import array_edges, coupling_schemes

__all__ = ['jacobian_at', 'check_stability', 'ZERO_EIGENVALUE_TOL']

ZERO_EIGENVALUE_TOL = 1e-8


def jacobian_at(state: LockedState, f: CouplingFunction) -> np.ndarray:
    heads, tails = array_edges(state.topology, state.n)
    return coupling_schemes[state.scheme].jacobian(f, state.theta(), heads, tails)


def check_stability(state: LockedState, f: CouplingFunction) -> bool:
    jacobian = jacobian_at(state, f)
    if np.allclose(jacobian, jacobian.T, rtol=0., atol=1e-14):
        eigenvalues = np.linalg.eigvalsh(jacobian).astype(complex)
    else:
        eigenvalues = np.linalg.eigvals(jacobian)

    # the uniform rotation θ_k → θ_k + c always contributes one zero eigenvalue
    zero_count = np.count_nonzero(np.abs(eigenvalues) < ZERO_EIGENVALUE_TOL)
    return bool(np.all(eigenvalues.real <= ZERO_EIGENVALUE_TOL) and zero_count == 1)
