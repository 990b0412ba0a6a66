from typing import Dict

from .base import BaseCouplingScheme
from .schemes import StandardCouplingScheme, TelescopicCouplingScheme
from ..models import Scheme

__all__ = ['coupling_schemes']

coupling_schemes: Dict[Scheme, BaseCouplingScheme] = {
    Scheme.STANDARD: StandardCouplingScheme(),
    Scheme.TELESCOPIC: TelescopicCouplingScheme(),
}
