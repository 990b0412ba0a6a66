from .bounds import chain_threshold, ring_upper_bound, ratio_upper_bound
from .locked_state import chain_locked_state, standard_chain_locked_state, chain_residual, standard_chain_residual
from .ring_approximation import ring_approximate_state, ring_standard_approximate_state, symmetric_zero
from .ring_search import ring_exact_solution_exists, ring_equation_residual, DEFAULT_RING_SEARCH_GRID
from .stability import jacobian_at, check_stability
from .states import LockedState, RingApproximation
from .tables import locked_state_table, locked_state_metadata, ring_approximation_table, \
    ring_approximation_metadata, phi_from_table

__all__ = ['chain_threshold', 'ring_upper_bound', 'ratio_upper_bound',
           'chain_locked_state', 'standard_chain_locked_state', 'chain_residual', 'standard_chain_residual',
           'ring_approximate_state', 'ring_standard_approximate_state', 'symmetric_zero',
           'ring_exact_solution_exists', 'ring_equation_residual', 'DEFAULT_RING_SEARCH_GRID',
           'jacobian_at', 'check_stability', 'LockedState', 'RingApproximation',
           'locked_state_table', 'locked_state_metadata', 'ring_approximation_table',
           'ring_approximation_metadata', 'phi_from_table']
