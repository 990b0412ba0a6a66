from enum import Enum


class Topology(Enum):
    """
    Boundary condition of a one-dimensional nearest-neighbour array
    """
    CHAIN = 'chain'
    RING = 'ring'


class Scheme(Enum):
    """
    How the coupling function enters the governing equations.

    STANDARD:   θ̇_k = ω_k + f(θ_{k-1} - θ_k) + f(θ_{k+1} - θ_k)
    TELESCOPIC: θ̇_k = ω_k + f(θ_{k-1} - θ_k) - f(θ_k - θ_{k+1})
    """
    STANDARD = 'standard'
    TELESCOPIC = 'telescopic'
