import heapq
import logging
import math
from typing import Callable, List, Optional, Tuple

import numpy as np

from polythresh.core.errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

DEFAULT_ABS_TOL = 1e-12
DEFAULT_REL_TOL = 1e-10
DEFAULT_MAX_DEPTH = 50

# Hard limit on the number of live subintervals, independent of depth
_MAX_INTERVALS = 4000

# 15-point Kronrod nodes on [-1, 1] (non-negative half) with their weights;
# the odd-indexed nodes are the 7-point Gauss nodes.
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327
])

_NODES = np.concatenate((-_XGK[:-1], _XGK[::-1]))
_KRONROD_WEIGHTS = np.concatenate((_WGK[:-1], _WGK[::-1]))
_GAUSS_WEIGHTS = np.zeros(15)
_GAUSS_WEIGHTS[[1, 3, 5]] = _WG[:3]
_GAUSS_WEIGHTS[[9, 11, 13]] = _WG[2::-1]
_GAUSS_WEIGHTS[7] = _WG[3]

Integrand = Callable[[np.ndarray], np.ndarray]


class QuadratureSpec:
    """
    QuadratureSpec holds tolerances of the adaptive quadrature. An integral is accepted once
    the estimated error falls below ``max(abs_tol, rel_tol * |value|)``.
    """
    __slots__ = ('_abs_tol', '_rel_tol', '_max_depth')

    def __init__(
            self,
            abs_tol: float = DEFAULT_ABS_TOL,
            rel_tol: float = DEFAULT_REL_TOL,
            max_depth: int = DEFAULT_MAX_DEPTH
    ):
        """
        Initializes QuadratureSpec object.

        >>> QuadratureSpec()
        QuadratureSpec(abs_tol=1e-12, rel_tol=1e-10, max_depth=50)

        :param abs_tol: absolute error target, must be > 0 (default: 1e-12)
        :param rel_tol: relative error target, must be > 0 (default: 1e-10)
        :param max_depth: maximum number of bisections of any subinterval, must be >= 1 (default: 50)
        """
        if not abs_tol > 0:
            raise ValueError('abs_tol must be > 0')

        if not rel_tol > 0:
            raise ValueError('rel_tol must be > 0')

        if max_depth < 1:
            raise ValueError('max_depth must be >= 1')

        self._abs_tol = float(abs_tol)
        self._rel_tol = float(rel_tol)
        self._max_depth = int(max_depth)

    @property
    def abs_tol(self) -> float:
        return self._abs_tol

    @property
    def rel_tol(self) -> float:
        return self._rel_tol

    @property
    def max_depth(self) -> int:
        return self._max_depth

    def __repr__(self) -> str:
        return (
            f'{self.__class__.__name__}('
            f'abs_tol={self._abs_tol!r}, rel_tol={self._rel_tol!r}, max_depth={self._max_depth})'
        )

    def __eq__(self, other: 'QuadratureSpec') -> bool:
        if not isinstance(other, QuadratureSpec):
            return NotImplemented

        return (
            self._abs_tol == other._abs_tol and
            self._rel_tol == other._rel_tol and
            self._max_depth == other._max_depth
        )


DEFAULT_SPEC = QuadratureSpec()


def _evaluate(f: Callable, nodes: np.ndarray) -> np.ndarray:
    # Vectorized call first, element-wise fallback for scalar-only callables
    try:
        values = np.asarray(f(nodes), dtype=float)
    except (TypeError, ValueError):
        values = None

    if values is None or values.shape != nodes.shape:
        if values is not None and values.ndim == 0:
            values = np.full(nodes.shape, float(values))
        else:
            values = np.array([float(f(float(t))) for t in nodes])

    if not np.all(np.isfinite(values)):
        raise DomainError('integrand must be finite inside the integration interval')

    return values


def _kronrod(f: Callable, a: float, b: float) -> Tuple[float, float]:
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    values = _evaluate(f, center + half * _NODES)

    kronrod = half * float(np.dot(_KRONROD_WEIGHTS, values))
    gauss = half * float(np.dot(_GAUSS_WEIGHTS, values))

    return kronrod, abs(kronrod - gauss)


def _adaptive(f: Callable, a: float, b: float, spec: QuadratureSpec) -> float:
    value, error = _kronrod(f, a, b)

    # Max-heap on error; the counter breaks ties so the order never depends on floats alone
    counter = 0
    heap: List[Tuple[float, int, float, float, float, float, int]] = [(-error, counter, a, b, value, error, 0)]
    total_value = value
    total_error = error
    splits = 0

    while total_error > max(spec.abs_tol, spec.rel_tol * abs(total_value)):
        _, _, left, right, part_value, part_error, depth = heapq.heappop(heap)

        if depth >= spec.max_depth or len(heap) >= _MAX_INTERVALS:
            raise ConvergenceError(
                f'quadrature did not converge on [{a!r}, {b!r}]: '
                f'estimated error {total_error:.3e} after {splits} subdivisions'
            )

        middle = 0.5 * (left + right)
        left_value, left_error = _kronrod(f, left, middle)
        right_value, right_error = _kronrod(f, middle, right)

        total_value += left_value + right_value - part_value
        total_error += left_error + right_error - part_error

        counter += 1
        heapq.heappush(heap, (-left_error, counter, left, middle, left_value, left_error, depth + 1))
        counter += 1
        heapq.heappush(heap, (-right_error, counter, middle, right, right_value, right_error, depth + 1))
        splits += 1

    # Final sum recomputed in interval order so round-off never depends on the update history
    result = math.fsum(item[4] for item in sorted(heap, key=lambda item: item[2]))
    logger.debug('quadrature on [%r, %r]: %d subdivisions, error %.3e', a, b, splits, total_error)

    return result


def integrate(f: Integrand, a: float, b: float, spec: Optional[QuadratureSpec] = None) -> float:
    """
    Integrates a function over ``[a, b]`` with adaptive 7/15-point Gauss-Kronrod rules
    and interval bisection. Upper limit may be ``math.inf``: the interval is then mapped
    to ``[0, 1)`` with ``t = a + u / (1 - u)``.

    The integrand may be vectorized (accepting and returning numpy arrays) or scalar;
    it is never evaluated at the endpoints.

    >>> round(integrate(lambda t: 1 - t ** 2, 0.0, 1.0), 12)
    0.666666666667

    :param f: integrand
    :param a: lower limit, finite
    :param b: upper limit, finite or math.inf
    :param spec: tolerances (default: QuadratureSpec())
    :return: value of the integral
    """
    if spec is None:
        spec = DEFAULT_SPEC

    if not math.isfinite(a):
        raise DomainError('lower limit must be finite')

    if math.isnan(b):
        raise DomainError('upper limit must not be NaN')

    if b == a:
        return 0.0

    if b < a:
        return -integrate(f, b, a, spec)

    if math.isinf(b):
        def mapped(u: np.ndarray) -> np.ndarray:
            u = np.asarray(u, dtype=float)
            rest = 1.0 - u
            return _evaluate(f, a + u / rest) / (rest * rest)

        return _adaptive(mapped, 0.0, 1.0, spec)

    return _adaptive(f, a, b, spec)


def integrate_endpoint_singular(
        f: Integrand,
        a: float,
        b: float,
        exponent: float,
        spec: Optional[QuadratureSpec] = None,
        at_lower: bool = False
) -> float:
    """
    Integrates ``f(t) * (b - t)^exponent`` over ``[a, b]`` for a smooth ``f`` and an integrable
    power singularity at the upper limit, ``exponent > -1``. With ``at_lower`` set the
    singular factor is ``(t - a)^exponent`` instead.

    The substitution ``t = b - v^p`` with ``p = 1 / (exponent + 1)`` turns the product into
    the smooth integrand ``p f(b - v^p)``; for exponent -1/2 this is ``t = b - v^2``.

    >>> round(integrate_endpoint_singular(lambda t: 1.0 + 0.0 * t, 0.0, 1.0, -0.5), 12)
    2.0

    :param f: smooth part of the integrand
    :param a: lower limit
    :param b: upper limit
    :param exponent: power of the singular factor, must be > -1
    :param spec: tolerances (default: QuadratureSpec())
    :param at_lower: singularity sits at the lower limit (default: False)
    :return: value of the integral
    """
    if not exponent > -1:
        raise DomainError(f'singularity exponent must be > -1, got {exponent!r}')

    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError('limits must be finite')

    if not a <= b:
        raise DomainError('lower limit must not exceed upper limit')

    power = 1.0 / (exponent + 1.0)

    def substituted(v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=float)
        if at_lower:
            return power * _evaluate(f, a + v ** power)
        return power * _evaluate(f, b - v ** power)

    return integrate(substituted, 0.0, (b - a) ** (exponent + 1.0), spec)


# Relative size below which the rest of a peaked integral is dropped
_NEGLIGIBLE = 1e-17
_MAX_PIECES = 2000


def integrate_peaked(
        f: Integrand,
        a: float,
        b: float,
        width: float,
        spec: Optional[QuadratureSpec] = None
) -> float:
    """
    Integrates a non-negative function that decreases from its peak at ``a`` towards ``b``.
    Upper limit may be ``math.inf``.

    The interval is covered by pieces of doubling length starting with ``width``, the decay scale of the peak.
    Each piece is integrated in units of ``width``. By monotonicity the rest of the interval
    is bounded by the integrand at the edge of the last piece, and integration stops once
    that bound is negligible.

    >>> round(integrate_peaked(lambda t: np.exp(-1e4 * t), 0.0, 1.0, 1e-4) * 1e4, 12)
    1.0

    :param f: integrand, non-increasing on [a, b]
    :param a: lower limit and position of the peak
    :param b: upper limit, b > a
    :param width: decay scale of the peak, must be > 0
    :param spec: tolerances (default: QuadratureSpec())
    :return: value of the integral
    """
    if not width > 0:
        raise DomainError(f'width must be > 0, got {width!r}')

    if not math.isfinite(a):
        raise DomainError('lower limit must be finite')

    if not b > a:
        raise DomainError('upper limit must exceed lower limit')

    def scaled(v: np.ndarray) -> np.ndarray:
        return _evaluate(f, a + width * np.asarray(v, dtype=float))

    limit = (b - a) / width
    total = 0.0
    left = 0.0
    step = 1.0

    for _ in range(_MAX_PIECES):
        right = min(limit, left + step)
        total += integrate(scaled, left, right, spec)

        if right >= limit:
            return width * total

        edge = float(scaled(np.array([right]))[0])

        if math.isinf(limit):
            if edge * step <= _NEGLIGIBLE * total:
                return width * (total + integrate(scaled, right, math.inf, spec))
        elif edge * (limit - right) <= _NEGLIGIBLE * total:
            return width * total

        left = right
        step *= 2

    raise ConvergenceError(f'peaked integral on [{a!r}, {b!r}] did not settle after {_MAX_PIECES} pieces')
