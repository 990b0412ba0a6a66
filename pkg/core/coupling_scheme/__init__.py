from .base import BaseCouplingScheme, array_edges, theta_from_phi
from .registry import coupling_schemes

__all__ = ['BaseCouplingScheme', 'array_edges', 'theta_from_phi', 'coupling_schemes']
