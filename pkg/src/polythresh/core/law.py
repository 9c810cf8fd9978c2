import math
from typing import Tuple, Union


def _check_dimension(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError('dimension n must be an integer')

    if n < 1:
        raise ValueError('dimension n must be >= 1')


class BetaLaw:
    """
    BetaLaw is the beta distribution on the Euclidean unit ball in dimension n,
    with density proportional to ``(1 - |x|^2)^beta``.
    For beta equal to 0 it is the uniform distribution on the ball.
    """
    __slots__ = ('_n', '_beta')

    def __init__(self, n: int, beta: float):
        """
        Initializes BetaLaw object. Dimension must be a positive integer
        and the shape parameter must be strictly greater than -1.

        >>> BetaLaw(3, 0.0)
        BetaLaw(n=3, beta=0.0)

        :param n: dimension of the ambient space
        :param beta: shape parameter, must be > -1
        """
        _check_dimension(n)

        if not (math.isfinite(beta) and beta > -1):
            raise ValueError('beta must be a finite number > -1')

        self._n = n
        self._beta = float(beta)

    @property
    def n(self) -> int:
        """
        Returns dimension of the law.

        :return: dimension
        """
        return self._n

    @property
    def beta(self) -> float:
        """
        Returns shape parameter of the law.

        :return: shape parameter beta
        """
        return self._beta

    @property
    def marginal_exponent(self) -> float:
        """
        Returns exponent of the one-dimensional marginal kernel ``(1 - t^2)^(beta + (n - 1) / 2)``.

        >>> BetaLaw(3, 1.0).marginal_exponent
        2.0

        :return: marginal exponent
        """
        return self._beta + (self._n - 1) / 2

    def with_dimension(self, n: int) -> 'BetaLaw':
        """
        Returns law with the same shape parameter in another dimension.

        :param n: new dimension
        :return: law in dimension n
        """
        return BetaLaw(n, self._beta)

    def projected(self, k: int) -> 'BetaLaw':
        """
        Returns the law whose k-dimensional polytopes carry the same normalized
        k-th intrinsic volume as the polytopes of this law, that is
        the beta law in dimension k with parameter ``beta + (n - k) / 2``.

        >>> BetaLaw(3, 0.0).projected(1)
        BetaLaw(n=1, beta=1.0)

        :param k: target dimension, 1 <= k <= n
        :return: projected law
        """
        if not 1 <= k <= self._n:
            raise ValueError(f'k must be in range [1, {self._n}]')

        return BetaLaw(k, self._beta + (self._n - k) / 2)

    def _as_tuple(self) -> Tuple[int, float]:
        return self._n, self._beta

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(n={self._n}, beta={self._beta!r})'

    def __eq__(self, other: 'BetaLaw') -> bool:
        if not isinstance(other, BetaLaw):
            return NotImplemented

        return self._as_tuple() == other._as_tuple()

    def __hash__(self) -> int:
        return hash((self.__class__.__name__,) + self._as_tuple())


class BetaPrimeLaw:
    """
    BetaPrimeLaw is the heavy-tailed beta-prime distribution on R^n
    with density proportional to ``(1 + |x|^2 / sigma^2)^(-beta)``.
    Multivariate t with nu degrees of freedom is the case beta = (n + nu) / 2, sigma = sqrt(nu).
    """
    __slots__ = ('_n', '_beta', '_sigma')

    def __init__(self, n: int, beta: float, sigma: float = 1.0):
        """
        Initializes BetaPrimeLaw object. Shape parameter must exceed n / 2
        and the scale must be positive.

        >>> BetaPrimeLaw(1, 1.0)
        BetaPrimeLaw(n=1, beta=1.0, sigma=1.0)

        :param n: dimension of the ambient space
        :param beta: shape parameter, must be > n / 2
        :param sigma: scale parameter, must be > 0 (default: 1.0)
        """
        _check_dimension(n)

        if not (math.isfinite(beta) and beta > n / 2):
            raise ValueError('beta must be a finite number > n / 2')

        if not (math.isfinite(sigma) and sigma > 0):
            raise ValueError('sigma must be a finite number > 0')

        self._n = n
        self._beta = float(beta)
        self._sigma = float(sigma)

    @property
    def n(self) -> int:
        """
        Returns dimension of the law.

        :return: dimension
        """
        return self._n

    @property
    def beta(self) -> float:
        """
        Returns shape parameter of the law.

        :return: shape parameter beta
        """
        return self._beta

    @property
    def sigma(self) -> float:
        """
        Returns scale parameter of the law.

        :return: scale parameter sigma
        """
        return self._sigma

    @property
    def marginal_exponent(self) -> float:
        """
        Returns ``b = beta - (n - 1) / 2``, the decay exponent of the one-dimensional
        marginal kernel ``(1 + t^2 / sigma^2)^(-b)``.

        >>> BetaPrimeLaw(2, 3.0).marginal_exponent
        2.5

        :return: marginal decay exponent
        """
        return self._beta - (self._n - 1) / 2

    @property
    def excess(self) -> float:
        """
        Returns ``beta - n / 2``, the quantity driving every beta-prime threshold.

        :return: excess of beta over n / 2
        """
        return self._beta - self._n / 2

    @classmethod
    def student(cls, n: int, dof: float) -> 'BetaPrimeLaw':
        """
        Returns the multivariate t law with ``dof`` degrees of freedom as a beta-prime law.

        >>> BetaPrimeLaw.student(1, 1.0)
        BetaPrimeLaw(n=1, beta=1.0, sigma=1.0)

        :param n: dimension
        :param dof: degrees of freedom, must be > 0
        :return: beta-prime law with beta = (n + dof) / 2 and sigma = sqrt(dof)
        """
        if not dof > 0:
            raise ValueError('dof must be > 0')

        return cls(n, (n + dof) / 2, math.sqrt(dof))

    @classmethod
    def near_gaussian(cls, n: int, sigma_squared: float) -> 'BetaPrimeLaw':
        """
        Returns the law with ``sigma^2 = 2 beta``, which tends to the standard Gaussian
        as sigma grows.

        :param n: dimension
        :param sigma_squared: value of sigma^2 = 2 beta
        :return: beta-prime law close to the standard Gaussian
        """
        return cls(n, sigma_squared / 2, math.sqrt(sigma_squared))

    def _as_tuple(self) -> Tuple[int, float, float]:
        return self._n, self._beta, self._sigma

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(n={self._n}, beta={self._beta!r}, sigma={self._sigma!r})'

    def __eq__(self, other: 'BetaPrimeLaw') -> bool:
        if not isinstance(other, BetaPrimeLaw):
            return NotImplemented

        return self._as_tuple() == other._as_tuple()

    def __hash__(self) -> int:
        return hash((self.__class__.__name__,) + self._as_tuple())


class SphereLaw:
    """
    SphereLaw is the uniform distribution on the unit sphere, the weak limit of BetaLaw as beta tends to -1.
    """
    __slots__ = ('_n',)

    def __init__(self, n: int):
        _check_dimension(n)
        self._n = n

    @property
    def n(self) -> int:
        return self._n

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(n={self._n})'

    def __eq__(self, other: 'SphereLaw') -> bool:
        if not isinstance(other, SphereLaw):
            return NotImplemented

        return self._n == other._n

    def __hash__(self) -> int:
        return hash((self.__class__.__name__, self._n))


class GaussianLaw:
    """
    GaussianLaw is the standard Gaussian distribution on R^n.
    """
    __slots__ = ('_n',)

    def __init__(self, n: int):
        _check_dimension(n)
        self._n = n

    @property
    def n(self) -> int:
        return self._n

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(n={self._n})'

    def __eq__(self, other: 'GaussianLaw') -> bool:
        if not isinstance(other, GaussianLaw):
            return NotImplemented

        return self._n == other._n

    def __hash__(self) -> int:
        return hash((self.__class__.__name__, self._n))


TailLaw = Union[BetaLaw, BetaPrimeLaw]
VertexLaw = Union[BetaLaw, BetaPrimeLaw, SphereLaw, GaussianLaw]
