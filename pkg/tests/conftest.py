import math

import pytest

from core.coupling import CouplingFunction, parse_coupling, profile
from core.frequencies import from_target_deviations

SHIFT = 0.6


@pytest.fixture(scope='session')
def sine():
    return CouplingFunction.sine()


@pytest.fixture(scope='session')
def sine_profile(sine):
    return profile(sine)


@pytest.fixture(scope='session')
def shifted_sine():
    return parse_coupling(f'sin(1,phase={SHIFT})-c')


@pytest.fixture(scope='session')
def sine_cos3():
    return parse_coupling('sin(1)+cos(3)')


@pytest.fixture(scope='session')
def coupling_functions(sine, shifted_sine, sine_cos3):
    return [sine, shifted_sine, sine_cos3, parse_coupling('-sin(1)')]


@pytest.fixture
def counterexample_frequencies():
    return from_target_deviations((1., -1., -1.))


def shifted_sine_extremes():
    return 1. - math.sin(SHIFT), -1. - math.sin(SHIFT)
