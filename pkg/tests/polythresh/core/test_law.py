import math

import pytest

from polythresh.core import BetaLaw, BetaPrimeLaw, GaussianLaw, SphereLaw


def test_beta_law_init():
    law = BetaLaw(3, 0.5)

    assert law.n == 3
    assert law.beta == 0.5
    assert repr(law) == 'BetaLaw(n=3, beta=0.5)'

    for n, beta in [(0, 0.0), (-1, 1.0), (2, -1.0), (2, -3.0), (2, math.inf), (2, math.nan)]:
        with pytest.raises(ValueError):
            BetaLaw(n, beta)

    with pytest.raises(TypeError):
        BetaLaw(2.0, 0.0)

    with pytest.raises(TypeError):
        BetaLaw(True, 0.0)


def test_beta_law_exponent_and_projection():
    assert BetaLaw(3, 1.0).marginal_exponent == 2.0
    assert BetaLaw(1, -0.5).marginal_exponent == -0.5

    assert BetaLaw(5, 0.0).projected(5) == BetaLaw(5, 0.0)
    assert BetaLaw(5, 0.0).projected(3) == BetaLaw(3, 1.0)
    assert BetaLaw(4, -0.5).projected(1) == BetaLaw(1, 1.0)
    assert BetaLaw(4, 2.0).with_dimension(7) == BetaLaw(7, 2.0)

    with pytest.raises(ValueError):
        BetaLaw(3, 0.0).projected(0)

    with pytest.raises(ValueError):
        BetaLaw(3, 0.0).projected(4)


def test_beta_prime_law_init():
    law = BetaPrimeLaw(2, 3.0, 2.0)

    assert law.n == 2
    assert law.beta == 3.0
    assert law.sigma == 2.0
    assert law.marginal_exponent == 2.5
    assert law.excess == 2.0
    assert repr(law) == 'BetaPrimeLaw(n=2, beta=3.0, sigma=2.0)'

    for n, beta, sigma in [(2, 1.0, 1.0), (2, 0.5, 1.0), (1, 1.0, 0.0), (1, 1.0, -2.0), (0, 1.0, 1.0)]:
        with pytest.raises(ValueError):
            BetaPrimeLaw(n, beta, sigma)


def test_beta_prime_law_constructors():
    assert BetaPrimeLaw.student(1, 1.0) == BetaPrimeLaw(1, 1.0, 1.0)
    assert BetaPrimeLaw.student(3, 4.0) == BetaPrimeLaw(3, 3.5, 2.0)

    law = BetaPrimeLaw.near_gaussian(2, 100.0)
    assert law.beta == 50.0
    assert law.sigma == 10.0

    with pytest.raises(ValueError):
        BetaPrimeLaw.student(2, 0.0)


def test_law_equality():
    assert BetaLaw(2, 1.0) == BetaLaw(2, 1.0)
    assert BetaLaw(2, 1.0) != BetaLaw(3, 1.0)
    assert BetaLaw(2, 1.0) != BetaPrimeLaw(2, 1.5)
    assert SphereLaw(3) == SphereLaw(3)
    assert SphereLaw(3) != GaussianLaw(3)
    assert GaussianLaw(2) != GaussianLaw(3)

    assert len({BetaLaw(2, 1.0), BetaLaw(2, 1.0), BetaPrimeLaw(2, 1.5), SphereLaw(2), GaussianLaw(2)}) == 4
    assert repr(SphereLaw(4)) == 'SphereLaw(n=4)'
    assert repr(GaussianLaw(1)) == 'GaussianLaw(n=1)'

    with pytest.raises(ValueError):
        SphereLaw(0)

    with pytest.raises(ValueError):
        GaussianLaw(0)
