import math
from typing import Optional, Protocol

import numpy as np

from polythresh.core.errors import DomainError
from polythresh.core.law import BetaLaw, BetaPrimeLaw, GaussianLaw, SphereLaw, VertexLaw
from polythresh.sampler.stream import RngStream
from polythresh.sampler.variates import sample_beta_scalar, sample_log_odds


class PointMeasure(Protocol):
    def sample(self, n: int, count: int, rng: RngStream) -> np.ndarray:
        ...


def _check_count(count: int) -> None:
    if isinstance(count, bool) or not isinstance(count, (int, np.integer)):
        raise TypeError('count must be an integer')

    if count < 0:
        raise ValueError('count must be non-negative')


def _directions(n: int, count: int, rng: RngStream) -> np.ndarray:
    gaussian = rng.generator.standard_normal((count, n))
    norms = np.linalg.norm(gaussian, axis=1, keepdims=True)

    # Zero Gaussian vectors occur with probability zero and are mapped to e_1
    zero = norms[:, 0] == 0
    if np.any(zero):
        gaussian[zero] = 0.0
        gaussian[zero, 0] = 1.0
        norms[zero] = 1.0

    return gaussian / norms


def sample_unit_sphere(n: int, rng: RngStream, count: Optional[int] = None) -> np.ndarray:
    """
    Draws points uniformly from the unit sphere in R^n by normalizing standard Gaussian vectors.
    For n = 1 the sphere is {-1, 1}.

    :param n: dimension, n >= 1
    :param rng: random stream
    :param count: number of points, None for a single point (default: None)
    :return: array of shape (n,) or (count, n)
    """
    if n < 1:
        raise DomainError(f'dimension must be >= 1, got {n!r}')

    size = 1 if count is None else count
    _check_count(size)

    points = _directions(n, size, rng)
    return points[0] if count is None else points


def _beta_radii(law: BetaLaw, count: int, rng: RngStream) -> np.ndarray:
    # R^2 ~ Beta(n/2, beta + 1)
    return np.sqrt(sample_beta_scalar(law.n / 2, law.beta + 1.0, rng, count))


def _beta_prime_radii(law: BetaPrimeLaw, count: int, rng: RngStream) -> np.ndarray:
    # U ~ Beta(n/2, beta - n/2) and R = sigma sqrt(U / (1 - U))
    return law.sigma * np.exp(0.5 * sample_log_odds(law.n / 2, law.excess, rng, count))


def sample_points(law: VertexLaw, count: int, rng: RngStream) -> np.ndarray:
    """
    Draws i.i.d. points from a rotationally invariant law as a uniform direction times
    an independent radius.

    >>> sample_points(BetaLaw(3, 0.0), 4, RngStream(1)).shape
    (4, 3)

    :param law: beta, beta-prime, sphere or Gaussian law
    :param count: number of points, count >= 0
    :param rng: random stream
    :return: array of shape (count, n)
    """
    _check_count(count)

    if isinstance(law, GaussianLaw):
        return rng.generator.standard_normal((count, law.n))

    if isinstance(law, SphereLaw):
        return _directions(law.n, count, rng)

    if isinstance(law, BetaLaw):
        radii = _beta_radii(law, count, rng)
    elif isinstance(law, BetaPrimeLaw):
        radii = _beta_prime_radii(law, count, rng)
    else:
        raise TypeError('law must be a BetaLaw, BetaPrimeLaw, SphereLaw or GaussianLaw')

    directions = _directions(law.n, count, rng)
    return directions * np.reshape(radii, (count, 1))


def sample_beta_point(law: BetaLaw, rng: RngStream) -> np.ndarray:
    """
    Draws a single point from the beta law on the unit ball.

    :param law: beta law
    :param rng: random stream
    :return: array of shape (n,) with norm <= 1
    """
    if not isinstance(law, BetaLaw):
        raise TypeError('law must be a BetaLaw')

    return sample_points(law, 1, rng)[0]


def sample_beta_prime_point(law: BetaPrimeLaw, rng: RngStream) -> np.ndarray:
    """
    Draws a single point from the beta-prime law.

    :param law: beta-prime law
    :param rng: random stream
    :return: array of shape (n,)
    """
    if not isinstance(law, BetaPrimeLaw):
        raise TypeError('law must be a BetaPrimeLaw')

    return sample_points(law, 1, rng)[0]


def sample_uniform_ball(n: int, radius: float, rng: RngStream, count: Optional[int] = None) -> np.ndarray:
    """
    Draws points uniformly from the centered ball of the given radius.

    :param n: dimension
    :param radius: radius, radius > 0
    :param rng: random stream
    :param count: number of points, None for a single point (default: None)
    :return: array of shape (n,) or (count, n)
    """
    if not radius > 0:
        raise DomainError(f'radius must be > 0, got {radius!r}')

    points = radius * sample_points(BetaLaw(n, 0.0), 1 if count is None else count, rng)
    return points[0] if count is None else points


def sample_gaussian_point(n: int, rng: RngStream, count: Optional[int] = None) -> np.ndarray:
    """
    Draws standard Gaussian points in R^n.

    :param n: dimension
    :param rng: random stream
    :param count: number of points, None for a single point (default: None)
    :return: array of shape (n,) or (count, n)
    """
    points = sample_points(GaussianLaw(n), 1 if count is None else count, rng)
    return points[0] if count is None else points


def thin_shell_fraction(
        n: int,
        eps: float,
        count: int,
        rng: RngStream,
        measure: Optional[PointMeasure] = None
) -> float:
    """
    Returns empirical mass of ``{x : ||x| - sqrt(n)| >= eps sqrt(n)}`` under an isotropic measure.
    Isotropic log-concave measures concentrate on the shell of radius sqrt(n), so the value
    is small and decreases with n.

    :param n: dimension
    :param eps: relative shell width, eps > 0
    :param count: number of samples, count >= 1
    :param rng: random stream
    :param measure: object with ``sample(n, count, rng)`` (default: standard Gaussian)
    :return: fraction of samples outside the shell
    """
    if not eps > 0:
        raise DomainError(f'eps must be > 0, got {eps!r}')

    if count < 1:
        raise ValueError('count must be >= 1')

    if measure is None:
        points = sample_points(GaussianLaw(n), count, rng)
    else:
        points = measure.sample(n, count, rng)

    root = math.sqrt(n)
    outside = np.abs(np.linalg.norm(points, axis=1) - root) >= eps * root

    return float(np.mean(outside))
