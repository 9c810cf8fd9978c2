import logging
import math
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from polythresh.core.bounds import Bounds
from polythresh.core.errors import CapacityError, ConfigError
from polythresh.core.estimate import Estimate
from polythresh.core.law import BetaLaw, BetaPrimeLaw, GaussianLaw, SphereLaw
from polythresh.dist.criteria import (
    BetaPrimeRegime,
    ProductDiagnostics,
    Side,
    ThresholdModel,
    annulus_bounds,
    beta_prime_regime,
    critical_N,
    dual_point_prob,
    dual_prime_radii,
    dual_radius,
    inclusion_prob_lower_bound,
    product_criterion,
    volume_lower_envelope,
    volume_upper_envelope
)
from polythresh.experiments.config import (
    HULL_SIZE_CAP,
    DualRegion,
    GridPoint,
    SweepConfig,
    SweepModel,
    check_fixed_dim,
    grid_points,
    row_seed,
    size_from_log
)
from polythresh.io.table import SweepRow
from polythresh.montecarlo.estimators import (
    InclusionMode,
    OffsetMode,
    VolumeMethod,
    estimate_dual_content_curve,
    estimate_hull_in_ball,
    estimate_inclusion_prob,
    estimate_measure_content_curve,
    estimate_volume_ratio,
    estimate_volume_ratio_curve
)
from polythresh.montecarlo.measure import Annulus, MeasureRegion, PointRegion, ScaledBall
from polythresh.montecarlo.runner import MonteCarloConfig
from polythresh.sampler.stream import RngStream

logger = logging.getLogger(__name__)

# Width of the acceptance band around analytic bounds, in standard errors
VIOLATION_SIGMAS = 3.0


def _volume_method(n: int) -> VolumeMethod:
    return VolumeMethod.EXACT if n <= 2 else VolumeMethod.MEMBERSHIP


def predicted_side(point: GridPoint) -> Side:
    """
    Returns the side of the threshold a grid point lies on, comparing its ``ln N`` with the
    critical values of its model for ``(1 - eps)`` and ``(1 + eps)``.

    Points in regime (a) of the beta-prime model have no lower side: they are ABOVE from
    ``ceil(3 n ln n)`` points on and UNDECIDED before.

    :param point: grid point
    :return: Side.BELOW, Side.ABOVE or Side.UNDECIDED in the gap between them
    """
    if point.model is ThresholdModel.FIXED_DIM:
        return Side.UNDECIDED

    sigma = 1.0 if point.sigma is None else point.sigma

    one_sided = point.model is ThresholdModel.BETA_PRIME and \
        beta_prime_regime(point.n, point.beta, sigma) is BetaPrimeRegime.A

    if one_sided:
        sufficient = critical_N(ThresholdModel.BETA_PRIME, point.n, beta=point.beta, sigma=sigma)
        return Side.ABOVE if point.log_N >= sufficient else Side.UNDECIDED

    model = ThresholdModel.BETA if point.model is ThresholdModel.GENERAL_RATE else point.model
    options = dict(
        beta=point.beta,
        sigma=sigma,
        eps=0.0 if point.eps is None else point.eps,
        R=point.R
    )

    if point.log_N <= critical_N(model, point.n, side=Side.BELOW, **options):
        return Side.BELOW

    if point.log_N >= critical_N(model, point.n, side=Side.ABOVE, **options):
        return Side.ABOVE

    return Side.UNDECIDED


def is_violation(estimate: Estimate, bounds: Optional[Bounds], spread: Optional[float] = None) -> bool:
    """
    Checks whether an estimate contradicts analytic bounds by more than three standard errors.

    :param estimate: Monte Carlo estimate
    :param bounds: analytic bounds, None if the row has none
    :param spread: standard error to use instead of the estimate's own (default: None)
    :return: True if the estimate lies outside the widened bounds
    """
    if bounds is None:
        return False

    margin = VIOLATION_SIGMAS * (estimate.std_err if spread is None else spread)
    return not bounds.widened(margin).contains(estimate.mean)


def _row(
        sweep: SweepModel,
        point: GridPoint,
        quantity: str,
        estimate: Estimate,
        diagnostics: Optional[ProductDiagnostics] = None,
        bounds: Optional[Bounds] = None,
        violation: bool = False,
        R: Optional[float] = None
) -> SweepRow:
    return SweepRow(
        sweep=sweep.value,
        model=point.model.value,
        quantity=quantity,
        n=point.n,
        log_N=point.log_N,
        N=point.N,
        mean=estimate.mean,
        std_err=estimate.std_err,
        n_outer=estimate.n_outer,
        n_inner=estimate.n_inner,
        seed=estimate.seed,
        predicted_side=predicted_side(point).value,
        beta=point.beta,
        sigma=point.sigma,
        eps=point.eps,
        R=point.R if R is None else R,
        delta=point.delta,
        product_below=None if diagnostics is None else diagnostics.product_below,
        excess_above=None if diagnostics is None else diagnostics.excess_above,
        bound_lower=None if bounds is None else bounds.lower,
        bound_upper=None if bounds is None else bounds.upper,
        violation=violation
    )


def _groups(points: Iterable[GridPoint]) -> List[List[GridPoint]]:
    # Points differing only in N share coupled replicas
    groups: Dict[Tuple, List[GridPoint]] = {}
    for point in points:
        groups.setdefault((point.model,) + point.group_key(), []).append(point)

    return list(groups.values())


def _group_stream(config: SweepConfig, group: Sequence[GridPoint]) -> RngStream:
    head = group[0]
    return RngStream(row_seed(config.seed, config.model.value, head.model.value, *head.group_key()))


def _sizes(group: Sequence[GridPoint]) -> List[int]:
    return sorted({point.N for point in group})


def _require_model(config: SweepConfig, *models: SweepModel) -> None:
    if config.model not in models:
        names = ', '.join(model.value for model in models)
        raise ConfigError(f'sweep model must be one of {names}, got {config.model.value}')


def run_beta_threshold_sweep(config: SweepConfig) -> List[SweepRow]:
    """
    Runs the volume threshold sweep for beta polytopes. Every row carries the coupled Monte Carlo
    volume ratio, the product-criterion diagnostics, the analytic envelope
    ``[max_R R^n P(R B in P) bound, min_r (r^n + N F(r))]`` and a violation flag.

    :param config: sweep configuration of model beta-hull
    :return: rows in grid order
    """
    _require_model(config, SweepModel.BETA_HULL)
    rows = []

    for group in _groups(grid_points(config)):
        head = group[0]
        law = BetaLaw(head.n, head.beta)
        sizes = _sizes(group)

        logger.info('beta sweep: n = %d, beta = %g, %d sizes', head.n, head.beta, len(sizes))
        estimates = estimate_volume_ratio_curve(law, sizes, config.mc, _group_stream(config, group),
                                                _volume_method(head.n))
        by_size = dict(zip(sizes, estimates))

        for point in group:
            estimate = by_size[point.N]
            bounds = Bounds(volume_lower_envelope(law, point.N), volume_upper_envelope(law, point.N))
            diagnostics = product_criterion(law, point.N, point.eps)

            rows.append(_row(config.model, point, 'volume-ratio', estimate, diagnostics, bounds,
                             is_violation(estimate, bounds)))

    return rows


def run_beta_prime_regimes(config: SweepConfig) -> List[SweepRow]:
    """
    Runs the content threshold sweep for beta-prime polytopes, with optional comparison rows
    for Gaussian polytopes (content) and spherical polytopes (volume ratio). Beta-prime grid
    points were checked against the regime hypotheses when the configuration was validated.

    :param config: sweep configuration of model beta-prime-hull
    :return: rows in grid order
    """
    _require_model(config, SweepModel.BETA_PRIME_HULL)
    rows = []

    for group in _groups(grid_points(config)):
        head = group[0]
        sizes = _sizes(group)
        stream = _group_stream(config, group)

        logger.info('beta-prime sweep: %s rows, n = %d, beta = %g, sigma = %g',
                    head.model.value, head.n, head.beta, head.sigma)

        if head.model is ThresholdModel.SPHERE:
            estimates = estimate_volume_ratio_curve(SphereLaw(head.n), sizes, config.mc, stream,
                                                    _volume_method(head.n))
            by_size = dict(zip(sizes, estimates))
            rows.extend(_row(config.model, point, 'volume-ratio', by_size[point.N]) for point in group)
            continue

        if head.model is ThresholdModel.GAUSSIAN:
            law = GaussianLaw(head.n)
        else:
            law = BetaPrimeLaw(head.n, head.beta, head.sigma)

        for measure in config.measures:
            estimates = estimate_measure_content_curve(law, sizes, measure, config.mc, stream)
            by_size = dict(zip(sizes, estimates))

            for point in group:
                diagnostics = None
                if isinstance(law, BetaPrimeLaw):
                    diagnostics = product_criterion(law, point.N, point.eps)

                rows.append(_row(config.model, point, f'content-{measure.kind.value}', by_size[point.N], diagnostics))

    return rows


def _binomial_spread(probability: float, count: int) -> float:
    return math.sqrt(max(probability * (1.0 - probability), 0.0) / count)


def run_dual_sweep(config: SweepConfig) -> List[SweepRow]:
    """
    Runs the sweep of the dual models, intersections of N random halfspaces. Regions are
    the ball of radius 1/R (beta model), the annulus between the inner radius of the threshold
    argument and the outer radius, the configured measures, and single points.

    Annulus rows carry the two-sided bound ``[(1 - F(a/s))^N, (1 - F(a/t))^N]``, point rows
    the closed form ``(1 - F(a/|x|))^N`` as both bounds, compared using its binomial standard error.

    :param config: sweep configuration of model dual-beta or dual-beta-prime
    :return: rows in grid order
    """
    _require_model(config, SweepModel.DUAL_BETA, SweepModel.DUAL_BETA_PRIME)
    rows = []

    for group in _groups(grid_points(config)):
        head = group[0]
        sizes = _sizes(group)
        stream = _group_stream(config, group)

        if head.model is ThresholdModel.DUAL_BETA:
            law = BetaLaw(head.n, head.beta)
            offset_mode = OffsetMode.ONE
        else:
            law = BetaPrimeLaw(head.n, head.beta, 1.0)
            offset_mode = OffsetMode.DIM_N

        logger.info('dual sweep: %s, n = %d, beta = %g', head.model.value, head.n, head.beta)

        def curve(region):
            estimates = estimate_dual_content_curve(law, sizes, offset_mode, region, config.mc, stream)
            return dict(zip(sizes, estimates))

        for kind in config.regions:
            if kind is DualRegion.BALL:
                by_size = curve(ScaledBall(1.0 / head.R))
                rows.extend(_row(config.model, point, 'content-ball', by_size[point.N]) for point in group)

            elif kind is DualRegion.ANNULUS:
                if isinstance(law, BetaLaw):
                    inner, outer = dual_radius(head.R, head.eps), 1.0 / head.R
                else:
                    inner, outer = dual_prime_radii(head.n, head.eps)

                by_size = curve(Annulus(inner, outer))
                for point in group:
                    estimate = by_size[point.N]
                    bounds = annulus_bounds(law, point.N, inner, outer)
                    rows.append(_row(config.model, point, 'content-annulus', estimate,
                                     bounds=bounds, violation=is_violation(estimate, bounds)))

            elif kind is DualRegion.MEASURE:
                for measure in config.measures:
                    by_size = curve(MeasureRegion(measure))
                    rows.extend(_row(config.model, point, f'content-{measure.kind.value}', by_size[point.N])
                                for point in group)

            else:
                for norm in config.point_norms:
                    x = np.zeros(head.n)
                    x[0] = norm
                    by_size = curve(PointRegion(x))

                    for point in group:
                        estimate = by_size[point.N]
                        closed = dual_point_prob(law, point.N, x)
                        bounds = Bounds(closed, closed)
                        spread = _binomial_spread(closed, estimate.n_outer)
                        rows.append(_row(config.model, point, f'membership-{norm:g}', estimate, bounds=bounds,
                                         violation=is_violation(estimate, bounds, spread)))

    return rows


def run_fixed_dim_threshold(
        n: int,
        delta: float,
        beta_list: Sequence[float],
        R_inner: float,
        R_outer: float,
        mc: MonteCarloConfig,
        rng: RngStream,
        hull_size_cap: int = HULL_SIZE_CAP
) -> List[SweepRow]:
    """
    Runs the fixed-dimension experiment with ``N = ceil(delta^beta)`` beta points. The volume ratio
    tends to ``((delta - 1)/delta)^(n/2)``, the hull contains the ball of radius
    ``R_inner < sqrt((delta - 1)/delta)`` and lies in the ball of radius ``R_outer`` with
    probability tending to 1.

    For each beta three rows are produced: the volume ratio (exact for n <= 2), the probability of
    ``R_inner B in P`` (exact for n = 2, direction-sampled upper estimate otherwise) with its
    analytic lower bound, and the probability of ``P in R_outer B``.

    :param n: dimension
    :param delta: base of the number of points, delta > 1
    :param beta_list: values of beta
    :param R_inner: inner radius
    :param R_outer: outer radius
    :param mc: Monte Carlo sizes
    :param rng: random stream; rows use streams derived from its seed and the row coordinates
    :param hull_size_cap: largest admissible N (default: HULL_SIZE_CAP)
    :return: rows, three per beta
    """
    check_fixed_dim(delta, R_inner, R_outer)
    sweep = SweepModel.FIXED_DIM
    rows = []

    for beta in beta_list:
        point = GridPoint(ThresholdModel.FIXED_DIM, n, beta, beta * math.log(delta), delta=delta)
        N = size_from_log(point.log_N)

        if N > hull_size_cap:
            raise CapacityError(f'N = delta^beta = {N} exceeds the hull size cap {hull_size_cap}')

        law = BetaLaw(n, beta)
        stream = RngStream(row_seed(rng.seed, rng.stream_id, sweep.value, n, beta, delta))
        logger.info('fixed-dimension sweep: n = %d, beta = %g, N = %d', n, beta, N)

        volume = estimate_volume_ratio(law, N, mc, stream, _volume_method(n))
        rows.append(_row(sweep, point, 'volume-ratio', volume))

        mode = InclusionMode.EXACT_2D if n == 2 else InclusionMode.DIRECTION_SAMPLED
        inclusion = estimate_inclusion_prob(law, N, R_inner, mode, mc, stream)
        bounds = None
        if N > n:
            bounds = Bounds(max(0.0, inclusion_prob_lower_bound(law, N, R_inner)), 1.0)
        rows.append(_row(sweep, point, f'inclusion-{mode.value}', inclusion, bounds=bounds,
                         violation=is_violation(inclusion, bounds), R=R_inner))

        containment = estimate_hull_in_ball(law, N, R_outer, mc, stream)
        rows.append(_row(sweep, point, 'hull-in-ball', containment, R=R_outer))

    return rows


def run_sweep(config: SweepConfig) -> List[SweepRow]:
    """
    Runs the sweep named by the configuration's model.

    :param config: validated sweep configuration
    :return: rows in grid order
    """
    if config.model is SweepModel.BETA_HULL:
        return run_beta_threshold_sweep(config)

    if config.model is SweepModel.BETA_PRIME_HULL:
        return run_beta_prime_regimes(config)

    if config.model in (SweepModel.DUAL_BETA, SweepModel.DUAL_BETA_PRIME):
        return run_dual_sweep(config)

    rows = []
    for n in config.n:
        rows.extend(run_fixed_dim_threshold(n, config.delta, config.beta, config.R_inner, config.R_outer,
                                            config.mc, RngStream(config.seed), config.hull_size_cap))
    return rows
