import math

import pytest

from polythresh.core import Bounds, DomainError
from polythresh.specfun.gamma import (
    ball_volume_log,
    beta_norm_const_log,
    beta_prime_consts,
    gamma_ratio_half,
    log_binomial,
    log_gamma,
    log_gamma_ratio_half,
    marginal_const,
    sphere_area_log,
    wendel_bounds
)


def test_log_gamma():
    assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-15)
    assert log_gamma(2.0) == pytest.approx(0.0, abs=1e-15)
    assert log_gamma(5.0) == pytest.approx(math.log(24.0))
    assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi))

    for x in [0.0, -1.0, -0.5]:
        with pytest.raises(DomainError):
            log_gamma(x)


def test_gamma_ratio_half():
    assert gamma_ratio_half(1.0) == pytest.approx(2 / math.sqrt(math.pi))
    assert gamma_ratio_half(0.5) == pytest.approx(math.sqrt(math.pi))

    # Both sides of the series threshold agree with the direct difference
    for x in [5.0, 19.5, 20.0, 20.5, 25.0, 100.0]:
        direct = math.lgamma(x) - math.lgamma(x + 0.5)
        assert log_gamma_ratio_half(x) == pytest.approx(direct, rel=1e-10, abs=1e-12)

    # Large arguments behave like x^(-1/2)
    assert gamma_ratio_half(1e12) * 1e6 == pytest.approx(1.0, rel=1e-9)

    with pytest.raises(DomainError):
        gamma_ratio_half(0.0)


def test_wendel_bounds():
    assert wendel_bounds(2.0) == Bounds(1 / math.sqrt(2.0), 1.0)

    for x in [1.001, 1.5, 2.0, 10.0, 1e3, 1e6]:
        assert wendel_bounds(x).contains(gamma_ratio_half(x), strict=True)

    for x in [1.0, 0.5, -2.0]:
        with pytest.raises(DomainError):
            wendel_bounds(x)


def test_ball_and_sphere():
    assert math.exp(ball_volume_log(1)) == pytest.approx(2.0)
    assert math.exp(ball_volume_log(2)) == pytest.approx(math.pi)
    assert math.exp(ball_volume_log(3)) == pytest.approx(4 * math.pi / 3)
    assert math.exp(sphere_area_log(2)) == pytest.approx(2 * math.pi)
    assert math.exp(sphere_area_log(3)) == pytest.approx(4 * math.pi)

    with pytest.raises(DomainError):
        ball_volume_log(0)


def test_log_binomial():
    assert log_binomial(10, 0) == 0.0
    assert log_binomial(10, 3) == pytest.approx(math.log(120.0))
    assert log_binomial(10, 7) == pytest.approx(math.log(120.0))

    expected = math.lgamma(1001) - 2 * math.lgamma(501)
    assert log_binomial(1000, 500) == pytest.approx(expected, rel=1e-10)

    expected = math.lgamma(10 ** 6 + 1) - math.lgamma(101) - math.lgamma(10 ** 6 - 99)
    assert log_binomial(10 ** 6, 100) == pytest.approx(expected, rel=1e-10)

    with pytest.raises(DomainError):
        log_binomial(5, 6)

    with pytest.raises(DomainError):
        log_binomial(5, -1)


def test_beta_constants():
    assert math.exp(beta_norm_const_log(2, 0.0)) == pytest.approx(1 / math.pi)
    assert math.exp(beta_norm_const_log(3, 0.0)) == pytest.approx(3 / (4 * math.pi))

    # Marginals of uniform laws on the interval and the 3-ball
    assert marginal_const(1, 0.0) == pytest.approx(0.5)
    assert marginal_const(3, 0.0) == pytest.approx(0.75)

    with pytest.raises(DomainError):
        beta_norm_const_log(2, -1.0)

    with pytest.raises(DomainError):
        marginal_const(0, 0.0)


def test_beta_prime_constants():
    # Standard Cauchy law
    log_c, alpha = beta_prime_consts(1, 1.0, 1.0)
    assert log_c == pytest.approx(-math.log(math.pi))
    assert alpha == pytest.approx(1 / math.pi)

    log_c2, alpha2 = beta_prime_consts(1, 1.0, 2.0)
    assert log_c2 == pytest.approx(log_c - math.log(2.0))
    assert alpha2 == pytest.approx(alpha / 2)

    for n, beta, sigma in [(2, 1.0, 1.0), (1, 1.0, 0.0), (0, 1.0, 1.0)]:
        with pytest.raises(DomainError):
            beta_prime_consts(n, beta, sigma)
