import enum
import math
from typing import Iterable, Union

import numpy as np

from polythresh.core.errors import DomainError
from polythresh.sampler.points import sample_gaussian_point, sample_uniform_ball
from polythresh.sampler.stream import RngStream


class MeasureKind(enum.Enum):
    GAUSSIAN_STD = 'gaussian'
    UNIFORM_BALL_ISOTROPIC = 'ball-isotropic'
    UNIFORM_BALL_UNIT = 'ball-unit'


class MeasureSpec:
    """
    MeasureSpec names a concrete probability measure on R^n that query points are drawn from.
    The standard Gaussian and the uniform law on the ball of radius ``sqrt(n + 2)`` are
    isotropic and log-concave; the uniform law on the unit ball is the volume reference.
    """
    __slots__ = ('_kind',)

    def __init__(self, kind: Union[MeasureKind, str]):
        """
        Initializes MeasureSpec object.

        >>> MeasureSpec('ball-isotropic')
        MeasureSpec(kind='ball-isotropic')

        :param kind: measure kind or its spelling
        """
        try:
            self._kind = MeasureKind(kind)
        except ValueError:
            raise DomainError(f'unknown measure kind {kind!r}') from None

    @property
    def kind(self) -> MeasureKind:
        return self._kind

    @property
    def is_isotropic(self) -> bool:
        """
        Returns True if the measure has identity covariance.

        :return: whether the measure is isotropic
        """
        return self._kind is not MeasureKind.UNIFORM_BALL_UNIT

    def radius(self, n: int) -> float:
        """
        Returns the radius of the supporting ball, infinite for the Gaussian.

        :param n: dimension
        :return: support radius
        """
        if self._kind is MeasureKind.GAUSSIAN_STD:
            return math.inf

        if self._kind is MeasureKind.UNIFORM_BALL_ISOTROPIC:
            # Coordinate variance of the uniform law on r B is r^2 / (n + 2)
            return math.sqrt(n + 2)

        return 1.0

    def sample(self, n: int, count: int, rng: RngStream) -> np.ndarray:
        """
        Draws points from the measure.

        :param n: dimension
        :param count: number of points
        :param rng: random stream
        :return: array of shape (count, n)
        """
        if self._kind is MeasureKind.GAUSSIAN_STD:
            return sample_gaussian_point(n, rng, count)

        return sample_uniform_ball(n, self.radius(n), rng, count)

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(kind={self._kind.value!r})'

    def __eq__(self, other: 'MeasureSpec') -> bool:
        if not isinstance(other, MeasureSpec):
            return NotImplemented

        return self._kind is other._kind

    def __hash__(self) -> int:
        return hash((self.__class__.__name__, self._kind))


class ScaledBall:
    """
    ScaledBall is the uniform law on the centered ball of radius ``s``.
    """
    __slots__ = ('_radius',)

    def __init__(self, radius: float):
        if not radius > 0:
            raise DomainError(f'radius must be > 0, got {radius!r}')

        self._radius = float(radius)

    @property
    def radius(self) -> float:
        return self._radius

    def sample(self, n: int, count: int, rng: RngStream) -> np.ndarray:
        return sample_uniform_ball(n, self._radius, rng, count)

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(radius={self._radius!r})'

    def __eq__(self, other: 'ScaledBall') -> bool:
        if not isinstance(other, ScaledBall):
            return NotImplemented

        return self._radius == other._radius


class Annulus:
    """
    Annulus is the uniform law on ``{x : t < |x| < s}``.
    """
    __slots__ = ('_inner', '_outer')

    def __init__(self, inner: float, outer: float):
        """
        Initializes Annulus object.

        >>> Annulus(1.5, 2.0)
        Annulus(inner=1.5, outer=2.0)

        :param inner: inner radius t > 0
        :param outer: outer radius s > t
        """
        if not 0 < inner < outer:
            raise DomainError(f'radii must satisfy 0 < inner < outer, got {inner!r} and {outer!r}')

        self._inner = float(inner)
        self._outer = float(outer)

    @property
    def inner(self) -> float:
        return self._inner

    @property
    def outer(self) -> float:
        return self._outer

    def sample(self, n: int, count: int, rng: RngStream) -> np.ndarray:
        """
        Draws uniform points by inverting the radial law ``P(|x| <= r) ∝ r^n - t^n``.

        :param n: dimension
        :param count: number of points
        :param rng: random stream
        :return: array of shape (count, n)
        """
        generator = rng.generator
        directions = generator.standard_normal((count, n))
        directions /= np.linalg.norm(directions, axis=1, keepdims=True)

        # Radii are formed relative to the outer radius to keep powers bounded
        ratio = (self._inner / self._outer) ** n
        u = generator.random(count)
        radii = self._outer * (ratio + u * (1.0 - ratio)) ** (1.0 / n)

        return directions * radii[:, np.newaxis]

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(inner={self._inner!r}, outer={self._outer!r})'

    def __eq__(self, other: 'Annulus') -> bool:
        if not isinstance(other, Annulus):
            return NotImplemented

        return (self._inner, self._outer) == (other._inner, other._outer)


class MeasureRegion:
    """
    MeasureRegion draws query points from a MeasureSpec.
    """
    __slots__ = ('_measure',)

    def __init__(self, measure: Union[MeasureSpec, MeasureKind, str]):
        self._measure = measure if isinstance(measure, MeasureSpec) else MeasureSpec(measure)

    @property
    def measure(self) -> MeasureSpec:
        return self._measure

    def sample(self, n: int, count: int, rng: RngStream) -> np.ndarray:
        return self._measure.sample(n, count, rng)

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(measure={self._measure!r})'

    def __eq__(self, other: 'MeasureRegion') -> bool:
        if not isinstance(other, MeasureRegion):
            return NotImplemented

        return self._measure == other._measure


class PointRegion:
    """
    PointRegion is the point mass at ``x``. Estimates over it are membership frequencies.
    """
    __slots__ = ('_point',)

    def __init__(self, x: Union[np.ndarray, Iterable[float]]):
        point = np.array(x, dtype=float).reshape(-1)

        if point.size < 1 or not np.all(np.isfinite(point)):
            raise DomainError('point must be a non-empty finite vector')

        point.setflags(write=False)
        self._point = point

    @property
    def point(self) -> np.ndarray:
        return self._point

    def sample(self, n: int, count: int, rng: RngStream) -> np.ndarray:
        if n != self._point.shape[0]:
            raise DomainError(f'point has dimension {self._point.shape[0]}, expected {n}')

        return np.tile(self._point, (count, 1))

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(x={self._point.tolist()!r})'

    def __eq__(self, other: 'PointRegion') -> bool:
        if not isinstance(other, PointRegion):
            return NotImplemented

        return np.array_equal(self._point, other._point)


Region = Union[ScaledBall, Annulus, MeasureRegion, PointRegion]
