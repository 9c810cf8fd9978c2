import enum
import hashlib
import logging
import math
import tomllib
from dataclasses import dataclass, field
from typing import Any, BinaryIO, Dict, List, Optional, Tuple

from polythresh.core.errors import CapacityError, ConfigError, DomainError
from polythresh.dist.criteria import (
    DUAL_EXCESS_MIN,
    ThresholdModel,
    beta_prime_regime,
    critical_N,
    dual_prime_radii,
    dual_radius
)
from polythresh.montecarlo.measure import MeasureSpec
from polythresh.montecarlo.runner import DEFAULT_DIRECTIONS, DEFAULT_INNER, DEFAULT_OUTER, MonteCarloConfig

logger = logging.getLogger(__name__)

HULL_SIZE_CAP = 200_000
DIMENSION_CAP = 20
DEFAULT_SEED = 0


class SweepModel(enum.Enum):
    BETA_HULL = 'beta-hull'
    BETA_PRIME_HULL = 'beta-prime-hull'
    DUAL_BETA = 'dual-beta'
    DUAL_BETA_PRIME = 'dual-beta-prime'
    FIXED_DIM = 'fixed-dim'


class DualRegion(enum.Enum):
    BALL = 'ball'
    ANNULUS = 'annulus'
    MEASURE = 'measure'
    POINT = 'point'


@dataclass(frozen=True)
class GridPoint:
    """
    Coordinates of one sweep row. ``log_N`` is the natural logarithm of the number
    of points; ``N`` is its integer ceiling.
    """
    model: ThresholdModel
    n: int
    beta: float
    log_N: float
    sigma: Optional[float] = None
    eps: Optional[float] = None
    R: Optional[float] = None
    delta: Optional[float] = None
    rate: Optional[float] = None

    @property
    def N(self) -> int:
        return size_from_log(self.log_N)

    def group_key(self) -> Tuple[Any, ...]:
        """
        Returns the coordinates shared by rows that are estimated on coupled replicas.

        :return: tuple of coordinates without the number of points
        """
        return self.n, self.beta, self.sigma, self.eps, self.R, self.delta


@dataclass(frozen=True)
class SweepConfig:
    """
    Declarative description of a sweep, normally read from a TOML file with ``load_config``.
    """
    model: SweepModel
    n: Tuple[int, ...]
    beta: Tuple[float, ...]
    sigma: Tuple[float, ...] = (1.0,)
    eps: float = 0.25
    log_N: Tuple[float, ...] = ()
    N: Tuple[int, ...] = ()
    critical_fractions: Tuple[float, ...] = ()
    rate: Tuple[float, ...] = ()
    R: Tuple[float, ...] = ()
    delta: float = 2.0
    R_inner: float = 0.6
    R_outer: float = 0.8
    measures: Tuple[MeasureSpec, ...] = (MeasureSpec('gaussian'),)
    compare: Tuple[ThresholdModel, ...] = ()
    regions: Tuple[DualRegion, ...] = (DualRegion.BALL,)
    point_norms: Tuple[float, ...] = ()
    mc: MonteCarloConfig = field(default_factory=MonteCarloConfig)
    seed: int = DEFAULT_SEED
    output_path: Optional[str] = None
    hull_size_cap: int = HULL_SIZE_CAP
    dimension_cap: int = DIMENSION_CAP


def size_from_log(log_N: float) -> int:
    """
    Returns the integer number of points ``ceil(exp(log_N))``, ignoring rounding noise
    of the logarithm.

    >>> size_from_log(17 * math.log(2))
    131072

    :param log_N: natural logarithm of the number of points
    :return: number of points, at least 1
    """
    if log_N > 700:
        raise CapacityError(f'ln N = {log_N!r} is too large for an explicit polytope')

    return max(1, math.ceil(math.exp(log_N) * (1 - 1e-12)))


def row_seed(seed: int, *coordinates: Any) -> int:
    """
    Derives a 63-bit seed from the master seed and grid coordinates with BLAKE2.

    :param seed: master seed
    :param coordinates: hashable grid coordinates with a stable repr
    :return: seed below 2^63
    """
    digest = hashlib.blake2b(repr((seed,) + coordinates).encode('utf-8'), digest_size=8).digest()
    return int.from_bytes(digest, 'big') >> 1


def _check_caps(config: SweepConfig, point: GridPoint) -> None:
    if point.n > config.dimension_cap:
        raise CapacityError(f'n = {point.n} exceeds the dimension cap {config.dimension_cap}')

    if point.N > config.hull_size_cap:
        raise CapacityError(f'N = {point.N} exceeds the hull size cap {config.hull_size_cap}')


def _log_sizes(config: SweepConfig, critical: Optional[float]) -> List[float]:
    sizes = list(config.log_N) + [math.log(N) for N in config.N]

    if config.critical_fractions:
        if critical is None:
            raise ConfigError('critical_fractions are not supported by this model')
        sizes.extend(fraction * critical for fraction in config.critical_fractions)

    return sizes


def _hypothesis(error: DomainError) -> ConfigError:
    return ConfigError(f'grid point violates a hypothesis: {error}')


def _beta_hull_points(config: SweepConfig) -> List[GridPoint]:
    points = []

    for n in config.n:
        for beta in config.beta:
            critical = critical_N(ThresholdModel.BETA, n, beta=beta)
            for log_N in _log_sizes(config, critical):
                points.append(GridPoint(ThresholdModel.BETA, n, beta, log_N, eps=config.eps))

            for rate in config.rate:
                log_N = critical_N(ThresholdModel.GENERAL_RATE, n, beta=beta, rate=rate)
                points.append(GridPoint(ThresholdModel.GENERAL_RATE, n, beta, log_N, eps=config.eps, rate=rate))

    return points


_COMPARISON_MODELS = (ThresholdModel.GAUSSIAN, ThresholdModel.SPHERE)


def _beta_prime_points(config: SweepConfig) -> List[GridPoint]:
    points = []

    if any(model not in _COMPARISON_MODELS for model in config.compare):
        raise ConfigError('compare accepts only gaussian and sphere')

    for n in config.n:
        for beta in config.beta:
            for sigma in config.sigma:
                beta_prime_regime(n, beta, sigma)
                critical = critical_N(ThresholdModel.BETA_PRIME, n, beta=beta, sigma=sigma)

                for log_N in _log_sizes(config, critical):
                    points.append(GridPoint(ThresholdModel.BETA_PRIME, n, beta, log_N, sigma=sigma, eps=config.eps))

                    for model in config.compare:
                        if model is ThresholdModel.GAUSSIAN:
                            critical_N(model, n, eps=config.eps)
                        points.append(GridPoint(model, n, beta, log_N, sigma=sigma, eps=config.eps))

    return points


def _dual_points(config: SweepConfig) -> List[GridPoint]:
    points = []

    if DualRegion.POINT in config.regions and not config.point_norms:
        raise ConfigError('the point region needs point_norms')

    for n in config.n:
        for beta in config.beta:
            if config.model is SweepModel.DUAL_BETA:
                for R in config.R:
                    critical = critical_N(ThresholdModel.DUAL_BETA, n, beta=beta, R=R)
                    if DualRegion.ANNULUS in config.regions:
                        dual_radius(R, config.eps)
                    for log_N in _log_sizes(config, critical):
                        points.append(GridPoint(ThresholdModel.DUAL_BETA, n, beta, log_N, eps=config.eps, R=R))
            else:
                excess = beta - n / 2
                if DualRegion.BALL in config.regions:
                    raise ConfigError('the ball region needs R and is defined for dual-beta only')
                if not excess >= DUAL_EXCESS_MIN:
                    raise ConfigError(
                        f'grid point violates a hypothesis: beta - n/2 -> infinity required '
                        f'(proxy beta - n/2 >= {DUAL_EXCESS_MIN:g}), got {excess!r}'
                    )
                critical = critical_N(ThresholdModel.DUAL_BETA_PRIME, n, beta=beta)
                if DualRegion.ANNULUS in config.regions:
                    dual_prime_radii(n, config.eps)
                for log_N in _log_sizes(config, critical):
                    points.append(GridPoint(ThresholdModel.DUAL_BETA_PRIME, n, beta, log_N, sigma=1.0, eps=config.eps))

    return points


def _fixed_dim_points(config: SweepConfig) -> List[GridPoint]:
    check_fixed_dim(config.delta, config.R_inner, config.R_outer)

    return [
        GridPoint(ThresholdModel.FIXED_DIM, n, beta, beta * math.log(config.delta), delta=config.delta)
        for n in config.n
        for beta in config.beta
    ]


def check_fixed_dim(delta: float, R_inner: float, R_outer: float) -> None:
    """
    Checks ``R_inner < sqrt((delta - 1)/delta) < R_outer < 1``.

    :param delta: base of N = delta^beta, delta > 1
    :param R_inner: radius of the ball expected inside the hull
    :param R_outer: radius of the ball expected to contain the hull
    :return: None
    """
    if not delta > 1:
        raise DomainError(f'delta must be > 1, got {delta!r}')

    critical = math.sqrt((delta - 1) / delta)
    if not 0 < R_inner < critical < R_outer < 1:
        raise DomainError(
            f'radii must satisfy 0 < R_inner < sqrt((delta - 1)/delta) = {critical:.6g} < R_outer < 1, '
            f'got R_inner = {R_inner!r}, R_outer = {R_outer!r}'
        )


def grid_points(config: SweepConfig) -> List[GridPoint]:
    """
    Expands a sweep configuration into grid points and validates every one of them against
    the hypotheses of its model and the size caps. Nothing is sampled.

    :param config: sweep configuration
    :return: grid points in sweep order
    """
    try:
        if config.model is SweepModel.BETA_HULL:
            points = _beta_hull_points(config)
        elif config.model is SweepModel.BETA_PRIME_HULL:
            points = _beta_prime_points(config)
        elif config.model in (SweepModel.DUAL_BETA, SweepModel.DUAL_BETA_PRIME):
            points = _dual_points(config)
        else:
            points = _fixed_dim_points(config)
    except ConfigError:
        raise
    except DomainError as e:
        raise _hypothesis(e) from None

    if not points:
        raise ConfigError('grid is empty: give log_N, N or critical_fractions')

    for point in points:
        _check_caps(config, point)

    return points


def _ints(value: Any) -> Tuple[int, ...]:
    values = value if isinstance(value, list) else [value]
    if not all(isinstance(item, int) and not isinstance(item, bool) for item in values):
        raise ConfigError(f'expected integers, got {value!r}')
    return tuple(values)


def _floats(value: Any) -> Tuple[float, ...]:
    values = value if isinstance(value, list) else [value]
    if not all(isinstance(item, (int, float)) and not isinstance(item, bool) for item in values):
        raise ConfigError(f'expected numbers, got {value!r}')
    return tuple(float(item) for item in values)


def _float(value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f'expected a number, got {value!r}')
    return float(value)


def _int(value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f'expected an integer, got {value!r}')
    return value


def _enum_list(kind: Any, value: Any) -> Tuple[Any, ...]:
    values = value if isinstance(value, list) else [value]
    try:
        return tuple(kind(item) for item in values)
    except ValueError:
        raise ConfigError(f'unknown value in {value!r}') from None


def _measures(value: Any) -> Tuple[MeasureSpec, ...]:
    values = value if isinstance(value, list) else [value]
    try:
        return tuple(MeasureSpec(item) for item in values)
    except DomainError as e:
        raise ConfigError(str(e)) from None


# Accepted keys of each table and their parsers
_SWEEP_KEYS = {
    'model': lambda value: _enum_list(SweepModel, value)[0],
    'seed': _int,
    'output': str,
    'hull_size_cap': _int,
    'dimension_cap': _int
}

_GRID_KEYS = {
    'n': _ints,
    'beta': _floats,
    'sigma': _floats,
    'eps': _float,
    'log_N': _floats,
    'N': _ints,
    'critical_fractions': _floats,
    'rate': _floats,
    'R': _floats,
    'delta': _float,
    'R_inner': _float,
    'R_outer': _float,
    'measures': _measures,
    'compare': lambda value: _enum_list(ThresholdModel, value),
    'regions': lambda value: _enum_list(DualRegion, value),
    'point_norms': _floats
}

_MC_KEYS = {
    'n_outer': _int,
    'n_inner': _int,
    'n_directions': _int,
    'workers': _int
}

_SWEEP_FIELDS = {'output': 'output_path'}


def _parse_table(data: Dict[str, Any], name: str, parsers: Dict[str, Any]) -> Dict[str, Any]:
    table = data.get(name, {})
    if not isinstance(table, dict):
        raise ConfigError(f'[{name}] must be a table')

    unknown = sorted(set(table) - set(parsers))
    if unknown:
        raise ConfigError(f'unknown keys in [{name}]: {", ".join(unknown)}')

    return {key: parsers[key](value) for key, value in table.items()}


def parse_config(data: Dict[str, Any]) -> SweepConfig:
    """
    Builds and validates a sweep configuration from parsed TOML data with the tables
    ``[sweep]``, ``[grid]`` and ``[mc]``.

    :param data: parsed TOML document
    :return: validated configuration
    """
    unknown = sorted(set(data) - {'sweep', 'grid', 'mc'})
    if unknown:
        raise ConfigError(f'unknown tables: {", ".join(unknown)}')

    sweep = _parse_table(data, 'sweep', _SWEEP_KEYS)
    grid = _parse_table(data, 'grid', _GRID_KEYS)
    mc = _parse_table(data, 'mc', _MC_KEYS)

    if 'model' not in sweep:
        raise ConfigError('[sweep] model is required')

    for key in ('n', 'beta'):
        if key not in grid:
            raise ConfigError(f'[grid] {key} is required')

    try:
        mc_config = MonteCarloConfig(
            n_outer=mc.get('n_outer', DEFAULT_OUTER),
            n_inner=mc.get('n_inner', DEFAULT_INNER),
            n_directions=mc.get('n_directions', DEFAULT_DIRECTIONS),
            workers=mc.get('workers')
        )
    except ValueError as e:
        raise ConfigError(f'[mc] {e}') from None

    options = {_SWEEP_FIELDS.get(key, key): value for key, value in sweep.items()}
    config = SweepConfig(mc=mc_config, **options, **grid)

    if config.seed < 0 or config.seed >= 2 ** 64:
        raise ConfigError('[sweep] seed must be in range [0, 2^64)')

    if config.hull_size_cap != HULL_SIZE_CAP or config.dimension_cap != DIMENSION_CAP:
        logger.warning('size caps overridden: hull size %d, dimension %d', config.hull_size_cap, config.dimension_cap)

    grid_points(config)
    return config


def load_config(file: BinaryIO) -> SweepConfig:
    """
    Reads and validates a TOML sweep configuration.

    :param file: binary file-like object
    :return: validated configuration
    """
    try:
        data = tomllib.load(file)
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f'invalid TOML: {e}') from None

    return parse_config(data)


def loads_config(text: str) -> SweepConfig:
    """
    Parses and validates a TOML sweep configuration from a string.

    :param text: TOML document
    :return: validated configuration
    """
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f'invalid TOML: {e}') from None

    return parse_config(data)
