from typing import Iterable, Union

import numpy as np

PointLike = Union[np.ndarray, Iterable[float]]


def _as_point_array(points: Union[np.ndarray, Iterable[PointLike]], name: str) -> np.ndarray:
    array = np.array(points, dtype=float)

    if array.ndim == 1:
        # A flat sequence is read as N points on the line
        array = array.reshape(-1, 1)

    if array.ndim != 2:
        raise ValueError(f'{name} must be a 2-dimensional array of shape (N, n)')

    if array.shape[0] < 1:
        raise ValueError(f'{name} must contain at least one point')

    if array.shape[1] < 1:
        raise ValueError('dimension must be >= 1')

    if not np.all(np.isfinite(array)):
        raise ValueError(f'{name} must be finite')

    array.setflags(write=False)
    return array


class PointCloudPolytope:
    """
    PointCloudPolytope represents the convex hull of an ordered list of N points in R^n.
    The polytope itself is never materialized: geometry routines work on the points.
    """
    __slots__ = ('_points',)

    def __init__(self, points: Union[np.ndarray, Iterable[PointLike]]):
        """
        Initializes PointCloudPolytope object from an array of shape (N, n).
        A one-dimensional sequence is read as N points on the real line.

        >>> PointCloudPolytope([[0, 0], [1, 0], [0, 1]])
        PointCloudPolytope(dim=2, size=3)

        :param points: array-like of shape (N, n) with N >= 1
        """
        self._points = _as_point_array(points, 'points')

    @property
    def dim(self) -> int:
        """
        Returns dimension of the ambient space.

        :return: dimension n
        """
        return self._points.shape[1]

    @property
    def points(self) -> np.ndarray:
        """
        Returns read-only array of the generating points.

        :return: array of shape (N, n)
        """
        return self._points

    def head(self, size: int) -> 'PointCloudPolytope':
        """
        Returns hull of the first ``size`` points. Estimators use it to couple
        polytopes of increasing size built from one sample.

        :param size: number of leading points to keep, 1 <= size <= N
        :return: polytope spanned by the leading points
        """
        if not 1 <= size <= len(self):
            raise ValueError(f'size must be in range [1, {len(self)}]')

        return PointCloudPolytope(self._points[:size])

    def projected(self, basis: np.ndarray) -> 'PointCloudPolytope':
        """
        Returns the orthogonal projection of the polytope expressed in coordinates of ``basis``.

        :param basis: array of shape (n, k) with orthonormal columns
        :return: k-dimensional polytope
        """
        return PointCloudPolytope(self._points @ basis)

    def __len__(self) -> int:
        """
        Returns number of generating points.

        :return: number of points N
        """
        return self._points.shape[0]

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(dim={self.dim}, size={len(self)})'

    def __eq__(self, other: 'PointCloudPolytope') -> bool:
        if not isinstance(other, PointCloudPolytope):
            return NotImplemented

        return np.array_equal(self._points, other._points)


class HalfspacePolytope:
    """
    HalfspacePolytope represents the intersection of halfspaces ``{x : <X_i, x> <= offset}``.
    It always contains the origin.
    """
    __slots__ = ('_normals', '_offset')

    def __init__(self, normals: Union[np.ndarray, Iterable[PointLike]], offset: float = 1.0):
        """
        Initializes HalfspacePolytope object.

        >>> HalfspacePolytope([[1.0, 0.0]], offset=2.0)
        HalfspacePolytope(dim=2, size=1, offset=2.0)

        :param normals: array-like of shape (N, n) of halfspace normals
        :param offset: right-hand side a > 0 shared by all halfspaces (default: 1.0)
        """
        self._normals = _as_point_array(normals, 'normals')

        if not offset > 0:
            raise ValueError('offset must be > 0')

        self._offset = float(offset)

    @property
    def dim(self) -> int:
        return self._normals.shape[1]

    @property
    def normals(self) -> np.ndarray:
        return self._normals

    @property
    def offset(self) -> float:
        return self._offset

    def head(self, size: int) -> 'HalfspacePolytope':
        """
        Returns intersection of the first ``size`` halfspaces.

        :param size: number of leading halfspaces to keep
        :return: polytope cut by the leading halfspaces
        """
        if not 1 <= size <= len(self):
            raise ValueError(f'size must be in range [1, {len(self)}]')

        return HalfspacePolytope(self._normals[:size], self._offset)

    def __len__(self) -> int:
        return self._normals.shape[0]

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(dim={self.dim}, size={len(self)}, offset={self._offset!r})'

    def __eq__(self, other: 'HalfspacePolytope') -> bool:
        if not isinstance(other, HalfspacePolytope):
            return NotImplemented

        return self._offset == other._offset and np.array_equal(self._normals, other._normals)
