import math

import numpy as np
import pytest

from polythresh.core import ConvergenceError, DomainError
from polythresh.specfun.quadrature import QuadratureSpec, integrate, integrate_endpoint_singular, integrate_peaked


def test_quadrature_spec():
    assert QuadratureSpec() == QuadratureSpec(1e-12, 1e-10, 50)
    assert repr(QuadratureSpec()) == 'QuadratureSpec(abs_tol=1e-12, rel_tol=1e-10, max_depth=50)'

    with pytest.raises(ValueError):
        QuadratureSpec(abs_tol=0.0)

    with pytest.raises(ValueError):
        QuadratureSpec(rel_tol=-1.0)

    with pytest.raises(ValueError):
        QuadratureSpec(max_depth=0)


def test_integrate_polynomials():
    assert integrate(lambda t: 1 - t ** 2, 0.0, 1.0) == pytest.approx(2 / 3, rel=1e-12)
    assert integrate(lambda t: t ** 5, -1.0, 2.0) == pytest.approx((64 - 1) / 6, rel=1e-12)
    assert integrate(lambda t: t, 1.0, 1.0) == 0.0
    assert integrate(lambda t: t, 1.0, 0.0) == pytest.approx(-0.5, rel=1e-12)


def test_integrate_scalar_integrand():
    assert integrate(lambda t: math.exp(-t), 0.0, 1.0) == pytest.approx(1 - math.exp(-1.0), rel=1e-12)
    assert integrate(lambda t: 3.0, 0.0, 2.0) == pytest.approx(6.0, rel=1e-12)


def test_integrate_infinite_limit():
    assert integrate(lambda t: np.exp(-t), 0.0, math.inf) == pytest.approx(1.0, rel=1e-10)
    assert integrate(lambda t: np.exp(-t * t), 0.0, math.inf) == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-10)
    assert integrate(lambda t: 1 / (1 + t * t), 1.0, math.inf) == pytest.approx(math.pi / 4, rel=1e-10)


def test_integrate_errors():
    with pytest.raises(DomainError):
        integrate(lambda t: t, -math.inf, 0.0)

    with pytest.raises(DomainError):
        integrate(lambda t: t, 0.0, math.nan)

    with pytest.raises(DomainError):
        integrate(lambda t: np.full_like(t, np.nan), 0.0, 1.0)

    with pytest.raises(ConvergenceError):
        integrate(lambda t: 1 / np.sqrt(t), 0.0, 1.0, QuadratureSpec(max_depth=3))


def test_integrate_endpoint_singular():
    assert integrate_endpoint_singular(lambda t: np.ones_like(t), 0.0, 1.0, -0.5) == pytest.approx(2.0, rel=1e-12)
    assert integrate_endpoint_singular(lambda t: t, 0.0, 1.0, -0.5, at_lower=True) == pytest.approx(2 / 3, rel=1e-12)

    # Arcsine law: 1/pi * integral of (1 - t^2)^(-1/2) over [-1, 1]
    value = integrate_endpoint_singular(lambda t: 1 / np.sqrt(1 + t), 0.0, 1.0, -0.5)
    assert 2 * value / math.pi == pytest.approx(1.0, rel=1e-10)

    assert integrate_endpoint_singular(lambda t: np.ones_like(t), 0.0, 1.0, 2.0) == pytest.approx(1 / 3, rel=1e-12)

    with pytest.raises(DomainError):
        integrate_endpoint_singular(lambda t: t, 0.0, 1.0, -1.0)

    with pytest.raises(DomainError):
        integrate_endpoint_singular(lambda t: t, 1.0, 0.0, 0.0)


def test_integrate_peaked():
    assert integrate_peaked(lambda t: np.exp(-1e4 * t), 0.0, 1.0, 1e-4) == pytest.approx(1e-4, rel=1e-10)
    assert integrate_peaked(lambda t: np.exp(-t), 0.0, math.inf, 1.0) == pytest.approx(1.0, rel=1e-10)
    assert integrate_peaked(lambda t: np.exp(-1e6 * (t - 2.0)), 2.0, math.inf, 1e-6) == pytest.approx(1e-6, rel=1e-10)

    # Peak far narrower than the interval
    value = integrate_peaked(lambda t: np.exp(-1e6 * t * t), 0.0, 10.0, 1e-3)
    assert value == pytest.approx(math.sqrt(math.pi / 1e6) / 2, rel=1e-10)

    # Wide decay scale still integrates the whole interval
    assert integrate_peaked(lambda t: 1 - t, 0.0, 1.0, 5.0) == pytest.approx(0.5, rel=1e-12)

    with pytest.raises(DomainError):
        integrate_peaked(lambda t: t, 0.0, 1.0, 0.0)

    with pytest.raises(DomainError):
        integrate_peaked(lambda t: t, 1.0, 1.0, 1.0)
