import math

import pytest

from polythresh.core import Bounds


def test_bounds_init():
    bounds = Bounds(0.25, 1.0)

    assert bounds.lower == 0.25
    assert bounds.upper == 1.0
    assert bounds.width == 0.75
    assert repr(bounds) == 'Bounds(lower=0.25, upper=1.0)'
    assert tuple(bounds) == (0.25, 1.0)

    assert Bounds(-math.inf, 0.0).lower == -math.inf
    assert Bounds(1.0, 1.0).width == 0.0

    with pytest.raises(ValueError):
        Bounds(1.0, 0.0)

    with pytest.raises(ValueError):
        Bounds(math.nan, 1.0)


def test_bounds_contains():
    bounds = Bounds(0.0, 1.0)

    assert bounds.contains(0.0)
    assert bounds.contains(0.5)
    assert bounds.contains(1.0)
    assert not bounds.contains(1.5)
    assert not bounds.contains(-1e-12)

    assert bounds.contains(0.5, strict=True)
    assert not bounds.contains(0.0, strict=True)
    assert not bounds.contains(1.0, strict=True)


def test_bounds_widened():
    assert Bounds(0.25, 0.5).widened(0.25) == Bounds(0.0, 0.75)
    assert Bounds(0.25, 0.5).widened(0.0) == Bounds(0.25, 0.5)

    with pytest.raises(ValueError):
        Bounds(0.0, 1.0).widened(-0.1)


def test_bounds_eq():
    assert Bounds(0.0, 1.0) == Bounds(0.0, 1.0)
    assert Bounds(0.0, 1.0) != Bounds(0.0, 2.0)
    assert hash(Bounds(0.0, 1.0)) == hash(Bounds(0.0, 1.0))
