from .coupling_function import CouplingFunction, evaluate, derivative, parse_coupling
from .profile import CouplingProfile, profile, invert_on_lambda, invert_on_lambda_array, lambda_table, \
    DEFAULT_GRID_SIZE

__all__ = ['CouplingFunction', 'evaluate', 'derivative', 'parse_coupling', 'CouplingProfile', 'profile',
           'invert_on_lambda', 'invert_on_lambda_array', 'lambda_table', 'DEFAULT_GRID_SIZE']
