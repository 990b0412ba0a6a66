import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from ..errors import CouplingSpecError

__all__ = ['CouplingFunction', 'evaluate', 'derivative', 'parse_coupling']

Harmonic = Tuple[int, float, float]

_NUMBER = r'(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?'
_TERM_RE = re.compile(
    r'(?P<sign>[+-]?)(?:'
    r'(?:(?P<coef>' + _NUMBER + r')\*)?(?P<func>sin|cos)\((?P<order>\d+)(?:,phase=(?P<phase>[+-]?' + _NUMBER + r'))?\)'
    r'|(?P<const>' + _NUMBER + r')'
    r'|(?P<zero>c)'
    r')'
)


@dataclass(frozen=True)
class CouplingFunction:
    """
    f(x) = constant_term + Σ_n (a_n cos(nx) + b_n sin(nx)), harmonics given as (n, a_n, b_n)
    """
    harmonics: Tuple[Harmonic, ...]
    constant_term: float = 0.
    spec: str = ''

    _orders: np.ndarray = field(init=False, repr=False, compare=False)
    _cos: np.ndarray = field(init=False, repr=False, compare=False)
    _sin: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        combined: Dict[int, List[float]] = defaultdict(lambda: [0., 0.])
        for order, cos_coeff, sin_coeff in self.harmonics:
            if int(order) != order or order < 1:
                raise CouplingSpecError(f'Harmonic order must be a positive integer, got {order}')
            combined[int(order)][0] += float(cos_coeff)
            combined[int(order)][1] += float(sin_coeff)

        harmonics = tuple((order, a, b) for order, (a, b) in sorted(combined.items()))
        object.__setattr__(self, 'harmonics', harmonics)
        object.__setattr__(self, 'constant_term', float(self.constant_term))
        object.__setattr__(self, '_orders', np.array([h[0] for h in harmonics], dtype=float))
        object.__setattr__(self, '_cos', np.array([h[1] for h in harmonics], dtype=float))
        object.__setattr__(self, '_sin', np.array([h[2] for h in harmonics], dtype=float))

    @classmethod
    def sine(cls) -> 'CouplingFunction':
        return cls(((1, 0., 1.),), spec='sin(1)')

    @property
    def is_constant(self) -> bool:
        return not (np.any(self._cos != 0) or np.any(self._sin != 0))

    @property
    def is_odd(self) -> bool:
        return self.constant_term == 0 and not np.any(self._cos != 0)

    def value(self, x):
        phases = np.multiply.outer(np.asarray(x, dtype=float), self._orders)
        result = self.constant_term + np.cos(phases) @ self._cos + np.sin(phases) @ self._sin
        return float(result) if np.ndim(result) == 0 else result

    def slope(self, x):
        phases = np.multiply.outer(np.asarray(x, dtype=float), self._orders)
        result = np.cos(phases) @ (self._orders * self._sin) - np.sin(phases) @ (self._orders * self._cos)
        return float(result) if np.ndim(result) == 0 else result

    def curvature(self, x):
        phases = np.multiply.outer(np.asarray(x, dtype=float), self._orders)
        squared = self._orders ** 2
        result = -(np.cos(phases) @ (squared * self._cos) + np.sin(phases) @ (squared * self._sin))
        return float(result) if np.ndim(result) == 0 else result

    def __str__(self):
        return self.spec or _format_harmonics(self.harmonics, self.constant_term)


def evaluate(f: CouplingFunction, x):
    return f.value(x)


def derivative(f: CouplingFunction, x):
    return f.slope(x)


def parse_coupling(text: str) -> CouplingFunction:
    """
    Compact text form of a coupling function:

        sin(1)                  sin(x)
        sin(1)+cos(3)           sin(x) + cos(3x)
        -2*sin(1)+0.5           -2 sin(x) + 0.5
        sin(1,phase=0.6)-c      sin(x + 0.6) - f(0), i.e. shifted so that f(0) = 0
    """
    compact = re.sub(r'\s+', '', text)
    if not compact:
        raise CouplingSpecError('Empty coupling function')

    harmonics: List[Harmonic] = []
    constant = 0.
    subtract_origin = False
    position = 0

    while position < len(compact):
        match = _TERM_RE.match(compact, position)
        if not match or match.end() == position:
            raise CouplingSpecError(f'Cannot parse coupling function {text!r} at position {position}')
        if position > 0 and not match.group('sign'):
            raise CouplingSpecError(f'Missing + or - before term {match.group(0)!r} in {text!r}')

        sign = -1. if match.group('sign') == '-' else 1.
        if match.group('func'):
            amplitude = sign * float(match.group('coef') or 1.)
            order = int(match.group('order'))
            if order < 1:
                raise CouplingSpecError(f'Harmonic order must be positive in {text!r}')
            phase = float(match.group('phase') or 0.)
            if match.group('func') == 'sin':
                # sin(nx + p) = sin(p) cos(nx) + cos(p) sin(nx)
                harmonics.append((order, amplitude * np.sin(phase), amplitude * np.cos(phase)))
            else:
                # cos(nx + p) = cos(p) cos(nx) - sin(p) sin(nx)
                harmonics.append((order, amplitude * np.cos(phase), -amplitude * np.sin(phase)))
        elif match.group('const'):
            constant += sign * float(match.group('const'))
        else:
            if sign > 0 or subtract_origin:
                raise CouplingSpecError(f"Only a single '-c' term is allowed in {text!r}")
            subtract_origin = True
        position = match.end()

    if subtract_origin:
        constant -= CouplingFunction(tuple(harmonics), constant).value(0.)

    return CouplingFunction(tuple(harmonics), constant, spec=compact)


def _format_harmonics(harmonics, constant_term) -> str:
    terms = [f'{a:+.12g}*cos({n}x){b:+.12g}*sin({n}x)' for n, a, b in harmonics]
    if constant_term:
        terms.append(f'{constant_term:+.12g}')
    return ''.join(terms) or '0'
