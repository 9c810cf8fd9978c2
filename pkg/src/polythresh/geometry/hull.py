from typing import Iterable, Tuple, Union

import numpy as np

from polythresh.core.errors import DomainError
from polythresh.core.polytope import PointCloudPolytope
from polythresh.geometry.simplex import LP_TOLERANCE, in_convex_hull

_UNIT_TOLERANCE = 1e-9

# Directions of the extreme points that seed the interior-point filter
_FILTER_ANGLES = np.linspace(0.0, 2.0 * np.pi, 8, endpoint=False)
_FILTER_THRESHOLD = 64


def _as_query(P: PointCloudPolytope, x: Union[np.ndarray, Iterable[float]]) -> np.ndarray:
    point = np.asarray(x, dtype=float).reshape(-1)

    if point.shape[0] != P.dim:
        raise DomainError(f'point has dimension {point.shape[0]}, polytope has dimension {P.dim}')

    return point


def _require_dim(P: PointCloudPolytope, dim: int) -> None:
    if P.dim != dim:
        raise DomainError(f'polytope must have dimension {dim}, got {P.dim}')


def support_function(P: PointCloudPolytope, theta: Union[np.ndarray, Iterable[float]]) -> float:
    """
    Returns the support function ``h_P(theta) = max_i <X_i, theta>``.

    >>> support_function(PointCloudPolytope([[1, 0], [0, 1]]), [1, 0])
    1.0

    :param P: polytope
    :param theta: unit vector
    :return: value of the support function
    """
    direction = _as_query(P, theta)

    if abs(float(np.linalg.norm(direction)) - 1.0) > _UNIT_TOLERANCE:
        raise DomainError('theta must be a unit vector')

    return float(np.max(P.points @ direction))


def support_values(P: PointCloudPolytope, thetas: np.ndarray) -> np.ndarray:
    """
    Evaluates the support function on every row of ``thetas`` at once.

    :param P: polytope
    :param thetas: unit vectors, array of shape (K, n)
    :return: array of shape (K,)
    """
    return np.max(np.asarray(thetas, dtype=float) @ P.points.T, axis=1)


def contains_hull(P: PointCloudPolytope, x: Union[np.ndarray, Iterable[float]], tolerance: float = LP_TOLERANCE) -> bool:
    """
    Decides whether ``x`` lies in the closed convex hull of the points of ``P``
    by phase-one simplex feasibility. Points outside the support in their own
    direction are rejected before the LP is built.

    >>> triangle = PointCloudPolytope([[0, 0], [1, 0], [0, 1]])
    >>> contains_hull(triangle, [0.25, 0.25])
    True
    >>> contains_hull(triangle, [1, 1])
    False

    :param P: polytope
    :param x: query point of dimension ``P.dim``
    :param tolerance: feasibility tolerance (default: LP_TOLERANCE)
    :return: True iff x is in conv(P)
    """
    point = _as_query(P, x)
    points = P.points

    norm = float(np.linalg.norm(point))
    if norm > 0 and norm - float(np.max(points @ point)) / norm > tolerance * (1.0 + norm):
        return False

    return in_convex_hull(points, point, tolerance)


def interval_hull_1d(P: PointCloudPolytope) -> Tuple[float, float]:
    """
    Returns the hull of one-dimensional points as the pair (min, max).

    >>> interval_hull_1d(PointCloudPolytope([-0.2, 0.7, 0.1]))
    (-0.2, 0.7)

    :param P: polytope of dimension 1
    :return: endpoints of the hull interval
    """
    _require_dim(P, 1)

    coordinates = P.points[:, 0]
    return float(coordinates.min()), float(coordinates.max())


def _cross(o: Tuple[float, float], a: Tuple[float, float], b: Tuple[float, float]) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _discard_interior(points: np.ndarray) -> np.ndarray:
    # Points strictly inside the polygon of extreme points in a few fixed directions
    # cannot be hull vertices
    directions = np.column_stack((np.cos(_FILTER_ANGLES), np.sin(_FILTER_ANGLES)))
    extremes = np.unique(np.argmax(points @ directions.T, axis=0))

    polygon = points[extremes]
    if polygon.shape[0] < 3:
        return points

    center = polygon.mean(axis=0)
    order = np.argsort(np.arctan2(polygon[:, 1] - center[1], polygon[:, 0] - center[0]))
    polygon = polygon[order]

    start = polygon
    end = np.roll(polygon, -1, axis=0)
    edges = end - start

    crosses = (edges[:, 0][np.newaxis, :] * (points[:, 1][:, np.newaxis] - start[:, 1][np.newaxis, :])
               - edges[:, 1][np.newaxis, :] * (points[:, 0][:, np.newaxis] - start[:, 0][np.newaxis, :]))

    interior = np.all(crosses > 0, axis=1)
    return points[~interior]


def convex_hull_2d(P: PointCloudPolytope) -> np.ndarray:
    """
    Returns the vertices of a planar hull in counter-clockwise order, computed by
    Andrew's monotone chain. Collinear boundary points are dropped.

    :param P: polytope of dimension 2
    :return: array of shape (V, 2); V < 3 for degenerate hulls
    """
    _require_dim(P, 2)

    points = P.points
    if points.shape[0] > _FILTER_THRESHOLD:
        points = _discard_interior(points)

    ordered = sorted(set(map(tuple, points.tolist())))
    if len(ordered) < 3:
        return np.array(ordered, dtype=float).reshape(-1, 2)

    lower = []
    for p in ordered:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)

    upper = []
    for p in reversed(ordered):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)

    return np.array(lower[:-1] + upper[:-1], dtype=float).reshape(-1, 2)


def hull_area_2d(P: PointCloudPolytope) -> float:
    """
    Returns the exact area of a planar hull by the shoelace formula.

    >>> hull_area_2d(PointCloudPolytope([[0, 0], [1, 0], [1, 1], [0, 1]]))
    1.0
    >>> hull_area_2d(PointCloudPolytope([[0, 0], [1, 1], [2, 2]]))
    0.0

    :param P: polytope of dimension 2
    :return: area, 0 for collinear points
    """
    vertices = convex_hull_2d(P)

    if vertices.shape[0] < 3:
        return 0.0

    x, y = vertices[:, 0], vertices[:, 1]
    return 0.5 * abs(float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))))


def contains_hull_2d(vertices: np.ndarray, queries: np.ndarray, tolerance: float = LP_TOLERANCE) -> np.ndarray:
    """
    Tests many planar points against a hull given by its counter-clockwise vertices.

    :param vertices: output of ``convex_hull_2d``
    :param queries: array of shape (M, 2)
    :param tolerance: distance tolerance for boundary points (default: LP_TOLERANCE)
    :return: boolean array of shape (M,)
    """
    queries = np.asarray(queries, dtype=float).reshape(-1, 2)
    count = vertices.shape[0]

    if count == 1:
        return np.linalg.norm(queries - vertices[0], axis=1) <= tolerance

    if count == 2:
        edge = vertices[1] - vertices[0]
        length = float(np.linalg.norm(edge))
        offsets = queries - vertices[0]
        along = offsets @ edge / length
        across = np.abs(offsets[:, 0] * edge[1] - offsets[:, 1] * edge[0]) / length
        return (across <= tolerance) & (along >= -tolerance) & (along <= length + tolerance)

    edges = np.roll(vertices, -1, axis=0) - vertices
    lengths = np.linalg.norm(edges, axis=1)

    crosses = (edges[:, 0][np.newaxis, :] * (queries[:, 1][:, np.newaxis] - vertices[:, 1][np.newaxis, :])
               - edges[:, 1][np.newaxis, :] * (queries[:, 0][:, np.newaxis] - vertices[:, 0][np.newaxis, :]))

    return np.all(crosses >= -tolerance * lengths[np.newaxis, :], axis=1)


def contains_hull_many(P: PointCloudPolytope, queries: np.ndarray, tolerance: float = LP_TOLERANCE) -> np.ndarray:
    """
    Tests many query points against the hull of ``P``. One- and two-dimensional hulls are
    tested exactly, higher dimensions run one LP per query.

    :param P: polytope
    :param queries: array of shape (M, n)
    :param tolerance: membership tolerance (default: LP_TOLERANCE)
    :return: boolean array of shape (M,)
    """
    queries = np.asarray(queries, dtype=float).reshape(-1, P.dim)

    if P.dim == 1:
        low, high = interval_hull_1d(P)
        coordinates = queries[:, 0]
        return (coordinates >= low - tolerance) & (coordinates <= high + tolerance)

    if P.dim == 2:
        return contains_hull_2d(convex_hull_2d(P), queries, tolerance)

    return np.array([contains_hull(P, query, tolerance) for query in queries], dtype=bool)


def ball_in_hull_2d(P: PointCloudPolytope, R: float) -> bool:
    """
    Decides exactly whether the disk of radius ``R`` centered at the origin lies in a planar hull:
    the origin must be interior and every edge line at distance at least ``R``.

    >>> square = PointCloudPolytope([[1, 1], [-1, 1], [-1, -1], [1, -1]])
    >>> ball_in_hull_2d(square, 0.99), ball_in_hull_2d(square, 1.01)
    (True, False)

    :param P: polytope of dimension 2
    :param R: disk radius, R > 0
    :return: True iff R B is contained in conv(P)
    """
    if not R > 0:
        raise DomainError(f'R must be > 0, got {R!r}')

    vertices = convex_hull_2d(P)
    if vertices.shape[0] < 3:
        return False

    edges = np.roll(vertices, -1, axis=0) - vertices
    # Signed distance of the origin to each edge line, positive on the inner side
    distances = (edges[:, 1] * vertices[:, 0] - edges[:, 0] * vertices[:, 1]) / np.linalg.norm(edges, axis=1)

    return bool(np.all(distances >= R))


def hull_in_ball(P: PointCloudPolytope, R: float) -> bool:
    """
    Decides whether the hull lies in the centered ball of radius ``R``, which holds
    iff every generating point does.

    >>> hull_in_ball(PointCloudPolytope([[0.9, 0.0]]), 0.8)
    False

    :param P: polytope
    :param R: ball radius, R >= 0
    :return: True iff conv(P) is contained in R B
    """
    if R < 0:
        raise DomainError(f'R must be >= 0, got {R!r}')

    return bool(np.max(np.linalg.norm(P.points, axis=1)) <= R)
