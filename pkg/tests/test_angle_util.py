import math

import numpy as np
import pytest

from core.angle_util import dedupe_periodic, periodic_grid, refine_periodic_roots, sign_change_brackets, wrap_angle


@pytest.mark.parametrize('x, expected', [
    (0., 0.),
    (math.pi, math.pi),
    (-math.pi, math.pi),
    (3 * math.pi / 2, -math.pi / 2),
    (-5 * math.pi / 2, -math.pi / 2),
])
def test_wrap_angle(x, expected):
    assert wrap_angle(x) == pytest.approx(expected, abs=1e-12)


def test_wrap_angle_keeps_shape():
    wrapped = wrap_angle(np.linspace(-20, 20, 101))
    assert wrapped.shape == (101,)
    assert np.all(wrapped > -math.pi) and np.all(wrapped <= math.pi)


def test_periodic_grid_overhangs_both_ends():
    x = periodic_grid(8)
    assert x[0] < -math.pi and x[-1] > math.pi
    assert np.allclose(np.diff(x), 2 * math.pi / 8)


def test_sign_change_brackets():
    x = np.array([0., 1., 2., 3.])
    assert sign_change_brackets(x, np.array([-1., 1., 2., -3.])) == [(0., 1.), (2., 3.)]


def test_refine_periodic_roots_of_sine():
    x = periodic_grid(100)
    roots = refine_periodic_roots(np.sin, x, np.sin(x))
    assert len(roots) == 2
    assert sorted(abs(r) for r in roots) == pytest.approx([0., math.pi], abs=1e-10)


def test_dedupe_periodic_merges_across_the_cut():
    assert dedupe_periodic([math.pi, -math.pi + 1e-12, 1.]) == pytest.approx([-math.pi + 1e-12, 1.])
