from typing import Dict, Optional

import numpy as np
import pandas as pd

from .states import LockedState, RingApproximation
from ..coupling import CouplingFunction
from ..models import Topology

__all__ = ['phi_columns', 'locked_state_table', 'locked_state_metadata', 'ring_approximation_table',
           'ring_approximation_metadata', 'phi_from_table']


def phi_columns(count: int):
    return [f'phi_{k + 1}' for k in range(count)]


def locked_state_table(state: LockedState) -> pd.DataFrame:
    """One row of phase differences phi_1 .. phi_{N-1}."""
    return pd.DataFrame([state.phi], columns=phi_columns(state.phi.size))


def locked_state_metadata(state: LockedState, f: CouplingFunction, seed: Optional[int] = None) -> Dict:
    return {'f': str(f), 'seed': seed, 'gamma': float(state.gamma), 'omega': float(state.omega), 'n': state.n,
            'topology': state.topology.value, 'scheme': state.scheme.value, 'stable': state.stable}


def ring_approximation_table(approximation: RingApproximation) -> pd.DataFrame:
    """
    Row `phi` holds the shifted differences; row `residual` the ring equation residuals, padded with NaN
    when the scheme has one more equation than differences.
    """
    columns = phi_columns(max(approximation.phi_ring.size, approximation.residual.size))
    rows = {}
    for label, values in (('phi', approximation.phi_ring), ('residual', approximation.residual)):
        row = np.full(len(columns), np.nan)
        row[:values.size] = values
        rows[label] = row
    table = pd.DataFrame.from_dict(rows, orient='index', columns=columns)
    table.insert(0, 'row', table.index)
    return table.reset_index(drop=True)


def ring_approximation_metadata(approximation: RingApproximation, chain_state: LockedState, f: CouplingFunction,
                                seed: Optional[int] = None) -> Dict:
    return {'f': str(f), 'seed': seed, 'gamma': float(chain_state.gamma), 'omega': float(chain_state.omega),
            'n': chain_state.n, 'topology': Topology.RING.value, 'scheme': approximation.scheme.value,
            'psi': float(approximation.psi), 'x0': float(approximation.x0),
            'residual_bound': float(approximation.residual_bound),
            'stable': approximation.stable}


def phi_from_table(table: pd.DataFrame, row: int = 0) -> np.ndarray:
    values = table.filter(regex=r'^phi_\d+$').iloc[row].to_numpy(dtype=float)
    return values[np.isfinite(values)]
