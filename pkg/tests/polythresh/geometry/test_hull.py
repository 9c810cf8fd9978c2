import math

import numpy as np
import pytest
from scipy.spatial import ConvexHull

from polythresh.core import DomainError, PointCloudPolytope
from polythresh.geometry.hull import (
    ball_in_hull_2d,
    contains_hull,
    contains_hull_2d,
    contains_hull_many,
    convex_hull_2d,
    hull_area_2d,
    hull_in_ball,
    interval_hull_1d,
    support_function,
    support_values
)
from polythresh.sampler.stream import RngStream

SQUARE = PointCloudPolytope([[1, 1], [-1, 1], [-1, -1], [1, -1]])


def _gaussian(count, dim, seed):
    return RngStream(seed).generator.standard_normal((count, dim))


def test_support_function():
    P = PointCloudPolytope([[1, 0], [0, 2], [-3, -1]])

    assert support_function(P, [1, 0]) == 1.0
    assert support_function(P, [0, 1]) == 2.0
    assert support_function(P, [-1, 0]) == 3.0
    assert support_function(P, [math.sqrt(0.5), math.sqrt(0.5)]) == pytest.approx(math.sqrt(2))

    values = support_values(P, np.array([[1.0, 0.0], [0.0, 1.0], [0.0, -1.0]]))
    assert np.allclose(values, [1.0, 2.0, 1.0])

    with pytest.raises(DomainError):
        support_function(P, [1, 1])

    with pytest.raises(DomainError):
        support_function(P, [1, 0, 0])


def test_contains_hull():
    triangle = PointCloudPolytope([[0, 0], [1, 0], [0, 1]])

    assert contains_hull(triangle, [0.25, 0.25])
    assert contains_hull(triangle, [0.0, 0.0])
    assert contains_hull(triangle, [0.5, 0.5])
    assert not contains_hull(triangle, [1, 1])
    assert not contains_hull(triangle, [-0.01, 0.5])

    with pytest.raises(DomainError):
        contains_hull(triangle, [0.0, 0.0, 0.0])


def test_contains_hull_matches_exact_planar_test():
    P = PointCloudPolytope(_gaussian(30, 2, 1))
    queries = 2.0 * _gaussian(200, 2, 2)

    exact = contains_hull_2d(convex_hull_2d(P), queries)
    lp = np.array([contains_hull(P, query) for query in queries])

    assert np.array_equal(exact, lp)
    assert 0 < np.sum(exact) < len(queries)


def test_contains_hull_many():
    line = PointCloudPolytope([-0.2, 0.7, 0.1])
    assert contains_hull_many(line, np.array([[-0.2], [0.0], [0.7], [0.71], [-0.3]])).tolist() == [
        True, True, True, False, False]

    assert contains_hull_many(SQUARE, np.array([[0.0, 0.0], [1.0, 1.0], [1.5, 0.0]])).tolist() == [True, True, False]

    cube = PointCloudPolytope([[x, y, z] for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)])
    queries = np.array([[0.0, 0.0, 0.0], [0.5, -0.5, 0.99], [1.01, 0.0, 0.0], [3.0, 3.0, 3.0]])
    assert contains_hull_many(cube, queries).tolist() == [True, True, False, False]


def test_interval_hull_1d():
    assert interval_hull_1d(PointCloudPolytope([-0.2, 0.7, 0.1])) == (-0.2, 0.7)
    assert interval_hull_1d(PointCloudPolytope([0.3])) == (0.3, 0.3)

    with pytest.raises(DomainError):
        interval_hull_1d(SQUARE)


def test_convex_hull_2d():
    points = [[0, 0], [2, 0], [2, 2], [0, 2], [1, 1], [1, 0], [0.5, 1.5]]
    vertices = convex_hull_2d(PointCloudPolytope(points))

    assert vertices.shape == (4, 2)
    assert {tuple(vertex) for vertex in vertices.tolist()} == {(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0)}

    # Counter-clockwise order has positive signed area
    x, y = vertices[:, 0], vertices[:, 1]
    assert np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)) > 0

    assert convex_hull_2d(PointCloudPolytope([[1, 1], [1, 1]])).shape == (1, 2)
    assert convex_hull_2d(PointCloudPolytope([[0, 0], [1, 1], [2, 2]])).shape == (2, 2)

    with pytest.raises(DomainError):
        convex_hull_2d(PointCloudPolytope([0.0, 1.0]))


def test_convex_hull_2d_large_clouds():
    for seed, count in [(3, 65), (4, 500), (5, 5000)]:
        points = _gaussian(count, 2, seed)
        reference = ConvexHull(points)
        vertices = convex_hull_2d(PointCloudPolytope(points))

        assert vertices.shape[0] == len(reference.vertices)
        assert {tuple(vertex) for vertex in vertices.tolist()} == {tuple(points[i]) for i in reference.vertices}
        assert hull_area_2d(PointCloudPolytope(points)) == pytest.approx(reference.volume, rel=1e-12)


def test_hull_area_2d():
    assert hull_area_2d(PointCloudPolytope([[0, 0], [1, 0], [1, 1], [0, 1]])) == 1.0
    assert hull_area_2d(PointCloudPolytope([[0, 0], [1, 1], [2, 2]])) == 0.0
    assert hull_area_2d(PointCloudPolytope([[0, 0], [4, 0], [0, 3], [1, 1]])) == 6.0

    # Inscribed regular polygon
    angles = np.linspace(0.0, 2 * np.pi, 1000, endpoint=False)
    circle = PointCloudPolytope(np.column_stack((np.cos(angles), np.sin(angles))))
    assert hull_area_2d(circle) == pytest.approx(500 * np.sin(2 * np.pi / 1000), rel=1e-12)


def test_contains_hull_2d_degenerate():
    point = np.array([[1.0, 1.0]])
    assert contains_hull_2d(point, np.array([[1.0, 1.0], [1.0, 1.1]])).tolist() == [True, False]

    segment = np.array([[0.0, 0.0], [2.0, 2.0]])
    queries = np.array([[1.0, 1.0], [2.0, 2.0], [3.0, 3.0], [1.0, 1.1]])
    assert contains_hull_2d(segment, queries).tolist() == [True, True, False, False]


def test_ball_in_hull_2d():
    assert ball_in_hull_2d(SQUARE, 0.99)
    assert ball_in_hull_2d(SQUARE, 1.0)
    assert not ball_in_hull_2d(SQUARE, 1.01)

    # Origin outside the hull
    assert not ball_in_hull_2d(PointCloudPolytope([[1, 1], [2, 1], [1, 2]]), 0.1)
    assert not ball_in_hull_2d(PointCloudPolytope([[-1, -1], [1, 1]]), 0.1)

    # Regular hexagon has inradius sqrt(3)/2
    angles = np.arange(6) * np.pi / 3
    hexagon = PointCloudPolytope(np.column_stack((np.cos(angles), np.sin(angles))))
    assert ball_in_hull_2d(hexagon, math.sqrt(3) / 2 - 1e-9)
    assert not ball_in_hull_2d(hexagon, math.sqrt(3) / 2 + 1e-9)

    with pytest.raises(DomainError):
        ball_in_hull_2d(SQUARE, 0.0)


def test_hull_in_ball():
    assert hull_in_ball(SQUARE, math.sqrt(2) + 1e-12)
    assert not hull_in_ball(SQUARE, 1.4)
    assert not hull_in_ball(PointCloudPolytope([[0.9, 0.0]]), 0.8)
    assert hull_in_ball(PointCloudPolytope([[0.0, 0.0]]), 0.0)

    with pytest.raises(DomainError):
        hull_in_ball(SQUARE, -1.0)
