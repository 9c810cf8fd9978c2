import math
from typing import Tuple

from scipy.special import gammaln

from polythresh.core.bounds import Bounds
from polythresh.core.errors import DomainError

# Above this argument the half-step ratio is taken from its asymptotic series
_RATIO_SERIES_THRESHOLD = 20.0

_LOG_PI = math.log(math.pi)

_BINOMIAL_PRODUCT_LIMIT = 256


def log_gamma(x: float) -> float:
    """
    Returns natural logarithm of the Gamma function for positive arguments.

    >>> log_gamma(1.0)
    0.0

    >>> round(log_gamma(0.5), 10)
    0.5723649429

    :param x: positive real argument
    :return: ln Gamma(x)
    """
    if not x > 0:
        raise DomainError(f'log_gamma requires x > 0, got {x!r}')

    return float(gammaln(x))


def log_gamma_ratio_half(x: float) -> float:
    """
    Returns ``ln(Gamma(x) / Gamma(x + 1/2))``.

    For large x the difference of two log-gamma values loses most of its digits,
    so the series ``-1/2 ln x + 1/(8x) - 1/(192x^3) + 1/(640x^5)`` is used there.

    :param x: positive real argument
    :return: logarithm of the half-step Gamma ratio
    """
    if not x > 0:
        raise DomainError(f'gamma ratio requires x > 0, got {x!r}')

    if x < _RATIO_SERIES_THRESHOLD:
        return float(gammaln(x) - gammaln(x + 0.5))

    inv = 1.0 / x
    inv3 = inv * inv * inv
    return -0.5 * math.log(x) + inv / 8 - inv3 / 192 + inv3 * inv * inv / 640


def gamma_ratio_half(x: float) -> float:
    """
    Returns ``Gamma(x) / Gamma(x + 1/2)``.

    >>> round(gamma_ratio_half(1.0), 7)
    1.1283792

    :param x: positive real argument
    :return: Gamma ratio, strictly positive
    """
    return math.exp(log_gamma_ratio_half(x))


def wendel_bounds(x: float) -> Bounds:
    """
    Returns the two-sided bound ``1/sqrt(x) < Gamma(x)/Gamma(x + 1/2) < 1/sqrt(x - 1)``
    valid for every x > 1.

    >>> wendel_bounds(2.0)
    Bounds(lower=0.7071067811865475, upper=1.0)

    :param x: real argument, must be > 1
    :return: bounds on the half-step Gamma ratio
    """
    if not x > 1:
        raise DomainError(f'Gamma ratio bounds require x > 1, got {x!r}')

    return Bounds(1.0 / math.sqrt(x), 1.0 / math.sqrt(x - 1.0))


def ball_volume_log(n: int) -> float:
    """
    Returns logarithm of the volume of the n-dimensional Euclidean unit ball,
    ``(n/2) ln pi - ln Gamma(n/2 + 1)``.

    >>> round(math.exp(ball_volume_log(2)), 12) == round(math.pi, 12)
    True

    :param n: dimension, must be >= 1
    :return: ln kappa_n
    """
    if n < 1:
        raise DomainError(f'dimension must be >= 1, got {n!r}')

    return n / 2 * _LOG_PI - log_gamma(n / 2 + 1)


def sphere_area_log(n: int) -> float:
    """
    Returns logarithm of the surface area of the unit sphere in R^n, ``ln(n kappa_n)``.

    :param n: dimension, must be >= 1
    :return: ln |S^(n-1)|
    """
    return math.log(n) + ball_volume_log(n)


def log_binomial(total: int, chosen: int) -> float:
    """
    Returns logarithm of the binomial coefficient ``C(total, chosen)``.

    :param total: number of items
    :param chosen: number of chosen items, 0 <= chosen <= total
    :return: ln C(total, chosen)
    """
    if not 0 <= chosen <= total:
        raise DomainError(f'binomial requires 0 <= chosen <= total, got ({total!r}, {chosen!r})')

    chosen = min(chosen, total - chosen)

    if chosen <= _BINOMIAL_PRODUCT_LIMIT:
        # ln of the falling factorial total (total - 1) ... (total - chosen + 1)
        return math.fsum(math.log(total - i) for i in range(chosen)) - log_gamma(chosen + 1)

    return log_gamma(total + 1) - log_gamma(chosen + 1) - log_gamma(total - chosen + 1)


def beta_norm_const_log(n: int, beta: float) -> float:
    """
    Returns logarithm of the normalizing constant of the beta density on the unit ball,
    ``c = pi^(-n/2) Gamma(beta + n/2 + 1) / Gamma(beta + 1)``.

    >>> round(math.exp(beta_norm_const_log(2, 0.0)) * math.pi, 12)
    1.0

    :param n: dimension, must be >= 1
    :param beta: shape parameter, must be > -1
    :return: ln c_{n, beta}
    """
    if n < 1:
        raise DomainError(f'dimension must be >= 1, got {n!r}')

    if not beta > -1:
        raise DomainError(f'beta must be > -1, got {beta!r}')

    return -n / 2 * _LOG_PI + log_gamma(beta + n / 2 + 1) - log_gamma(beta + 1)


def marginal_const(n: int, beta: float) -> float:
    """
    Returns normalizing constant of the one-dimensional marginal of the beta law,
    ``alpha = pi^(-1/2) Gamma(beta + n/2 + 1) / Gamma(beta + (n+1)/2)``.

    >>> round(marginal_const(1, 0.0), 12)
    0.5

    :param n: dimension, must be >= 1
    :param beta: shape parameter, must be > -1
    :return: alpha_{n, beta}
    """
    if n < 1:
        raise DomainError(f'dimension must be >= 1, got {n!r}')

    if not beta > -1:
        raise DomainError(f'beta must be > -1, got {beta!r}')

    # Gamma(z + 1/2) / Gamma(z) with z = beta + (n + 1)/2
    return math.exp(-0.5 * _LOG_PI - log_gamma_ratio_half(beta + (n + 1) / 2))


def beta_prime_consts(n: int, beta: float, sigma: float) -> Tuple[float, float]:
    """
    Returns normalizing constants of the beta-prime law: the logarithm of the density
    constant ``c~ = sigma^(-n) pi^(-n/2) Gamma(beta) / Gamma(beta - n/2)`` and the
    marginal constant ``alpha~ = sigma^(-1) pi^(-1/2) Gamma(beta - (n-1)/2) / Gamma(beta - n/2)``.

    :param n: dimension, must be >= 1
    :param beta: shape parameter, must be > n/2
    :param sigma: scale parameter, must be > 0
    :return: pair (ln c~, alpha~)
    """
    if n < 1:
        raise DomainError(f'dimension must be >= 1, got {n!r}')

    if not beta > n / 2:
        raise DomainError(f'beta must be > n/2 = {n / 2!r}, got {beta!r}')

    if not sigma > 0:
        raise DomainError(f'sigma must be > 0, got {sigma!r}')

    log_c = -n * math.log(sigma) - n / 2 * _LOG_PI + log_gamma(beta) - log_gamma(beta - n / 2)
    # Gamma(z + 1/2) / Gamma(z) with z = beta - n/2
    alpha = math.exp(-math.log(sigma) - 0.5 * _LOG_PI - log_gamma_ratio_half(beta - n / 2))

    return log_c, alpha
