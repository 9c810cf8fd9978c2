import enum
import math
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from polythresh.core.errors import DomainError
from polythresh.core.estimate import Estimate
from polythresh.core.law import BetaLaw, BetaPrimeLaw, SphereLaw, TailLaw, VertexLaw
from polythresh.core.polytope import HalfspacePolytope, PointCloudPolytope
from polythresh.geometry.halfspace import contains_halfspace_many
from polythresh.geometry.hull import (
    ball_in_hull_2d,
    contains_hull,
    contains_hull_many,
    hull_area_2d,
    hull_in_ball,
    interval_hull_1d,
    support_values
)
from polythresh.montecarlo.measure import MeasureSpec, PointRegion, Region
from polythresh.montecarlo.runner import MonteCarloConfig, run_coupled, run_replicas
from polythresh.sampler.points import sample_points, sample_uniform_ball, sample_unit_sphere
from polythresh.sampler.stream import RngStream

# Random 2-planes per replica in the projection estimate of the second intrinsic volume
PLANES_PER_REPLICA = 8


class VolumeMethod(enum.Enum):
    MEMBERSHIP = 'membership'
    EXACT = 'exact'


class InclusionMode(enum.Enum):
    EXACT_2D = 'exact-2d'
    DIRECTION_SAMPLED = 'direction-sampled'


class OffsetMode(enum.Enum):
    ONE = 'one'
    DIM_N = 'dim-n'


def _check_sizes(sizes: Sequence[int]) -> List[int]:
    sizes = [int(size) for size in sizes]

    if not sizes:
        raise DomainError('at least one polytope size is required')

    if any(size < 0 for size in sizes):
        raise DomainError('polytope sizes must be non-negative')

    return sizes


def _exact_volume_ratio(P: PointCloudPolytope) -> float:
    if P.dim == 1:
        low, high = interval_hull_1d(P)
        return (high - low) / 2.0

    return hull_area_2d(P) / math.pi


def _hull_fraction(points: np.ndarray, size: int, queries: np.ndarray) -> float:
    if size == 0:
        return 0.0

    return float(np.mean(contains_hull_many(PointCloudPolytope(points[:size]), queries)))


def estimate_volume_ratio_curve(
        law: Union[BetaLaw, SphereLaw],
        sizes: Sequence[int],
        cfg: MonteCarloConfig,
        rng: RngStream,
        method: VolumeMethod = VolumeMethod.MEMBERSHIP
) -> List[Estimate]:
    """
    Estimates ``E V_n(P_N) / V_n(B)`` for several polytope sizes on coupled replicas: each
    replica draws ``max(sizes)`` points once and the hull of the first N of them is used
    for size N, so the estimates are nondecreasing in N replica by replica.

    With the membership method each replica averages hull membership over ``cfg.n_inner``
    points uniform in the unit ball. The exact method (n <= 2) uses the interval length or
    the hull area directly.

    :param law: law of the vertices, supported in the unit ball
    :param sizes: polytope sizes
    :param cfg: run configuration
    :param rng: random stream
    :param method: membership or exact (default: VolumeMethod.MEMBERSHIP)
    :return: one estimate per size
    """
    if not isinstance(law, (BetaLaw, SphereLaw)):
        raise TypeError('law must be a BetaLaw or a SphereLaw')

    sizes = _check_sizes(sizes)
    method = VolumeMethod(method)
    n = law.n

    if method is VolumeMethod.EXACT and n > 2:
        raise DomainError(f'exact volumes are available for n <= 2, got n = {n}')

    def replica(stream: RngStream) -> List[float]:
        points = sample_points(law, max(sizes), stream)

        if method is VolumeMethod.EXACT:
            return [_exact_volume_ratio(PointCloudPolytope(points[:size])) if size > 0 else 0.0 for size in sizes]

        queries = sample_uniform_ball(n, 1.0, stream, cfg.n_inner)
        return [_hull_fraction(points, size, queries) for size in sizes]

    inner = 0 if method is VolumeMethod.EXACT else cfg.n_inner
    return run_coupled(replica, cfg, rng, n_inner=inner)


def estimate_volume_ratio(
        law: Union[BetaLaw, SphereLaw],
        N: int,
        cfg: MonteCarloConfig,
        rng: RngStream,
        method: VolumeMethod = VolumeMethod.MEMBERSHIP
) -> Estimate:
    """
    Estimates the expected volume of the hull of N points relative to the unit ball.

    :param law: law of the vertices
    :param N: number of points
    :param cfg: run configuration
    :param rng: random stream
    :param method: membership or exact (default: VolumeMethod.MEMBERSHIP)
    :return: estimate of the volume ratio
    """
    return estimate_volume_ratio_curve(law, [N], cfg, rng, method)[0]


def estimate_measure_content_curve(
        law: VertexLaw,
        sizes: Sequence[int],
        measure: MeasureSpec,
        cfg: MonteCarloConfig,
        rng: RngStream
) -> List[Estimate]:
    """
    Estimates ``E mu(P_N)`` for several polytope sizes on coupled replicas, with query
    points drawn from ``measure``.

    :param law: law of the vertices
    :param sizes: polytope sizes
    :param measure: measure of the query points
    :param cfg: run configuration
    :param rng: random stream
    :return: one estimate per size
    """
    sizes = _check_sizes(sizes)
    n = law.n

    def replica(stream: RngStream) -> List[float]:
        points = sample_points(law, max(sizes), stream)
        queries = measure.sample(n, cfg.n_inner, stream)
        return [_hull_fraction(points, size, queries) for size in sizes]

    return run_coupled(replica, cfg, rng)


def estimate_measure_content(
        law: VertexLaw,
        N: int,
        measure: MeasureSpec,
        cfg: MonteCarloConfig,
        rng: RngStream
) -> Estimate:
    """
    Estimates the expected measure of the hull of N points.

    :param law: law of the vertices, typically beta-prime
    :param N: number of points
    :param measure: measure of the query points
    :param cfg: run configuration
    :param rng: random stream
    :return: estimate of the content
    """
    return estimate_measure_content_curve(law, [N], measure, cfg, rng)[0]


def estimate_point_membership(
        law: VertexLaw,
        N: int,
        x: Union[np.ndarray, Iterable[float]],
        cfg: MonteCarloConfig,
        rng: RngStream
) -> Estimate:
    """
    Estimates the probability that a fixed point lies in the hull of N random points.

    :param law: law of the vertices
    :param N: number of points, N >= 1
    :param x: point of dimension law.n
    :param cfg: run configuration
    :param rng: random stream
    :return: estimate of the membership probability
    """
    if N < 1:
        raise DomainError(f'N must be >= 1, got {N!r}')

    point = np.asarray(x, dtype=float).reshape(-1)
    if point.shape[0] != law.n:
        raise DomainError(f'point must have dimension {law.n}, got {point.shape[0]}')

    def replica(stream: RngStream) -> float:
        P = PointCloudPolytope(sample_points(law, N, stream))
        return float(contains_hull(P, point))

    return run_replicas(replica, cfg, rng, n_inner=1)


def estimate_inclusion_prob(
        law: VertexLaw,
        N: int,
        R: float,
        mode: InclusionMode,
        cfg: MonteCarloConfig,
        rng: RngStream
) -> Estimate:
    """
    Estimates the probability that the hull of N random points contains the centered ball of
    radius R.

    ``EXACT_2D`` decides containment exactly from the hull edges and requires n = 2.
    ``DIRECTION_SAMPLED`` only checks ``R theta`` for ``cfg.n_directions`` random unit vectors
    per replica, a necessary condition, so it estimates an upper bound on the probability.

    :param law: law of the vertices
    :param N: number of points, N >= 1
    :param R: radius of the ball, R > 0
    :param mode: exact planar test or direction sampling
    :param cfg: run configuration
    :param rng: random stream
    :return: estimate of the (bound on the) inclusion probability
    """
    mode = InclusionMode(mode)
    n = law.n

    if N < 1:
        raise DomainError(f'N must be >= 1, got {N!r}')

    if not R > 0:
        raise DomainError(f'R must be > 0, got {R!r}')

    if mode is InclusionMode.EXACT_2D:
        if n != 2:
            raise DomainError(f'exact inclusion requires n = 2, got n = {n}')

        def replica(stream: RngStream) -> float:
            return float(ball_in_hull_2d(PointCloudPolytope(sample_points(law, N, stream)), R))

        return run_replicas(replica, cfg, rng, n_inner=1)

    def sampled_replica(stream: RngStream) -> float:
        P = PointCloudPolytope(sample_points(law, N, stream))
        thetas = sample_unit_sphere(n, stream, cfg.n_directions)

        if np.any(support_values(P, thetas) < R):
            return 0.0

        return float(all(contains_hull(P, R * theta) for theta in thetas))

    return run_replicas(sampled_replica, cfg, rng, n_inner=cfg.n_directions)


def estimate_hull_in_ball(law: VertexLaw, N: int, R: float, cfg: MonteCarloConfig, rng: RngStream) -> Estimate:
    """
    Estimates the probability that the hull of N random points lies in the ball of radius R.

    :param law: law of the vertices
    :param N: number of points, N >= 1
    :param R: radius of the ball, R >= 0
    :param cfg: run configuration
    :param rng: random stream
    :return: estimate of the probability
    """
    if N < 1:
        raise DomainError(f'N must be >= 1, got {N!r}')

    def replica(stream: RngStream) -> float:
        return float(hull_in_ball(PointCloudPolytope(sample_points(law, N, stream)), R))

    return run_replicas(replica, cfg, rng, n_inner=1)


def estimate_mean_width_ratio(law: BetaLaw, N: int, cfg: MonteCarloConfig, rng: RngStream) -> Estimate:
    """
    Estimates ``E V_1(P_N) / V_1(B)``, which equals the mean of the support function over
    uniform random directions.

    :param law: law of the vertices
    :param N: number of points, N >= 1
    :param cfg: run configuration, ``cfg.n_directions`` directions per replica
    :param rng: random stream
    :return: estimate of the first intrinsic volume ratio
    """
    if N < 1:
        raise DomainError(f'N must be >= 1, got {N!r}')

    def replica(stream: RngStream) -> float:
        P = PointCloudPolytope(sample_points(law, N, stream))
        thetas = sample_unit_sphere(law.n, stream, cfg.n_directions)
        return float(np.mean(support_values(P, thetas)))

    return run_replicas(replica, cfg, rng, n_inner=cfg.n_directions)


def _random_plane(n: int, stream: RngStream) -> np.ndarray:
    q, r = np.linalg.qr(stream.generator.standard_normal((n, 2)))
    # Sign fix makes the basis Haar distributed
    return q * np.sign(np.diag(r))


def _projected_area_ratio(law: BetaLaw, N: int, cfg: MonteCarloConfig, rng: RngStream) -> Estimate:
    def replica(stream: RngStream) -> float:
        P = PointCloudPolytope(sample_points(law, N, stream))
        areas = [hull_area_2d(P.projected(_random_plane(law.n, stream))) for _ in range(PLANES_PER_REPLICA)]
        return float(np.mean(areas)) / math.pi

    return run_replicas(replica, cfg, rng, n_inner=PLANES_PER_REPLICA)


def estimate_intrinsic_identity(
        n: int,
        k: int,
        beta: float,
        N: int,
        cfg: MonteCarloConfig,
        rng: RngStream
) -> Tuple[Estimate, Estimate]:
    """
    Estimates both sides of the projection identity for intrinsic volumes of beta polytopes:
    the k-th intrinsic volume ratio of the hull of N points from the beta law in R^n equals the
    volume ratio of the hull of N points from the beta law with parameter ``beta + (n - k)/2``
    in R^k.

    For k = 1 the left side is the mean width ratio, for k = 2 the mean area of projections
    onto random planes divided by pi. Right sides use exact one- and two-dimensional volumes.
    The two estimates use independent streams.

    :param n: dimension, n >= k
    :param k: order of the intrinsic volume, 1 or 2
    :param beta: parameter of the beta law
    :param N: number of points, N >= 1
    :param cfg: run configuration
    :param rng: random stream
    :return: pair (left side, right side)
    """
    if k not in (1, 2):
        raise DomainError(f'k must be 1 or 2, got {k!r}')

    if n < k:
        raise DomainError(f'n must be >= k, got n = {n}, k = {k}')

    if N < 1:
        raise DomainError(f'N must be >= 1, got {N!r}')

    law = BetaLaw(n, beta)

    if k == 1:
        lhs = estimate_mean_width_ratio(law, N, cfg, rng)
    else:
        lhs = _projected_area_ratio(law, N, cfg, rng)

    rhs = estimate_volume_ratio(law.projected(k), N, cfg, rng, VolumeMethod.EXACT)

    return lhs, rhs


def _dual_offset(law: TailLaw, offset_mode: OffsetMode) -> float:
    if offset_mode is OffsetMode.ONE:
        if not isinstance(law, BetaLaw):
            raise DomainError('offset one is defined for the beta law')
        return 1.0

    if not isinstance(law, BetaPrimeLaw):
        raise DomainError('offset n is defined for the beta-prime law')

    return float(law.n)


def estimate_dual_content_curve(
        law: TailLaw,
        sizes: Sequence[int],
        offset_mode: OffsetMode,
        region: Region,
        cfg: MonteCarloConfig,
        rng: RngStream
) -> List[Estimate]:
    """
    Estimates the fraction of ``region`` covered by ``{x : <X_i, x> <= a, i <= N}`` for several
    N on coupled replicas. The offset is a = 1 for the beta law and a = n for the
    beta-prime law.

    :param law: law of the normals
    :param sizes: numbers of halfspaces, each >= 1
    :param offset_mode: OffsetMode.ONE (beta) or OffsetMode.DIM_N (beta-prime)
    :param region: query region: ball, annulus, measure or single point
    :param cfg: run configuration
    :param rng: random stream
    :return: one estimate per size
    """
    sizes = _check_sizes(sizes)
    if min(sizes) < 1:
        raise DomainError('numbers of halfspaces must be >= 1')

    offset = _dual_offset(law, OffsetMode(offset_mode))
    n = law.n
    inner = 1 if isinstance(region, PointRegion) else cfg.n_inner

    def replica(stream: RngStream) -> List[float]:
        normals = sample_points(law, max(sizes), stream)
        queries = region.sample(n, inner, stream)

        return [
            float(np.mean(contains_halfspace_many(HalfspacePolytope(normals[:size], offset), queries)))
            for size in sizes
        ]

    return run_coupled(replica, cfg, rng, n_inner=inner)


def estimate_dual_content(
        law: TailLaw,
        N: int,
        offset_mode: OffsetMode,
        region: Region,
        cfg: MonteCarloConfig,
        rng: RngStream
) -> Estimate:
    """
    Estimates the fraction of ``region`` covered by the intersection of N random halfspaces.

    :param law: law of the normals
    :param N: number of halfspaces, N >= 1
    :param offset_mode: OffsetMode.ONE (beta) or OffsetMode.DIM_N (beta-prime)
    :param region: query region
    :param cfg: run configuration
    :param rng: random stream
    :return: estimate of the covered fraction
    """
    return estimate_dual_content_curve(law, [N], offset_mode, region, cfg, rng)[0]
