from typing import Iterable, Union

import numpy as np

from polythresh.core.errors import DomainError
from polythresh.core.polytope import HalfspacePolytope


def contains_halfspace_poly(H: HalfspacePolytope, x: Union[np.ndarray, Iterable[float]]) -> bool:
    """
    Decides whether ``x`` satisfies every constraint ``<X_i, x> <= offset``.

    >>> contains_halfspace_poly(HalfspacePolytope([[1.0, 0.0]]), [2.0, 0.0])
    False
    >>> contains_halfspace_poly(HalfspacePolytope([0.5]), [1.9])
    True

    :param H: halfspace polytope
    :param x: query point of dimension ``H.dim``
    :return: True iff x is in H
    """
    point = np.asarray(x, dtype=float).reshape(-1)

    if point.shape[0] != H.dim:
        raise DomainError(f'point has dimension {point.shape[0]}, polytope has dimension {H.dim}')

    return bool(np.max(H.normals @ point) <= H.offset)


def contains_halfspace_many(H: HalfspacePolytope, queries: np.ndarray) -> np.ndarray:
    """
    Tests many query points at once.

    :param H: halfspace polytope
    :param queries: array of shape (M, n)
    :return: boolean array of shape (M,)
    """
    queries = np.asarray(queries, dtype=float).reshape(-1, H.dim)
    return np.max(queries @ H.normals.T, axis=1) <= H.offset
