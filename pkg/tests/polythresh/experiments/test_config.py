import io
import logging
import math

import pytest

from polythresh.core.errors import CapacityError, ConfigError
from polythresh.dist.criteria import ThresholdModel
from polythresh.experiments.config import (
    DIMENSION_CAP,
    HULL_SIZE_CAP,
    DualRegion,
    GridPoint,
    SweepModel,
    grid_points,
    load_config,
    loads_config,
    row_seed,
    size_from_log
)
from polythresh.montecarlo.measure import MeasureKind, MeasureSpec
from polythresh.montecarlo.runner import MonteCarloConfig

BETA_HULL = '''
[sweep]
model = "beta-hull"
seed = 42
output = "out.csv"

[grid]
n = [2, 3]
beta = [0.0, 1.5]
N = [10, 100]
log_N = 2.0

[mc]
n_outer = 20
n_inner = 50
workers = 1
'''


def test_size_from_log():
    assert size_from_log(17 * math.log(2)) == 131072
    assert size_from_log(math.log(1000)) == 1000
    assert size_from_log(math.log(2.5)) == 3
    assert size_from_log(0.0) == 1
    assert size_from_log(-3.0) == 1

    with pytest.raises(CapacityError):
        size_from_log(701.0)


def test_row_seed():
    seed = row_seed(7, 'beta-hull', 3, 0.5)

    assert seed == row_seed(7, 'beta-hull', 3, 0.5)
    assert 0 <= seed < 2 ** 63
    assert seed != row_seed(8, 'beta-hull', 3, 0.5)
    assert seed != row_seed(7, 'beta-hull', 3, 1.5)


def test_grid_point():
    point = GridPoint(ThresholdModel.BETA, 3, 0.5, math.log(100), eps=0.1)

    assert point.N == 100
    assert point.group_key() == (3, 0.5, None, 0.1, None, None)


def test_loads_config():
    config = loads_config(BETA_HULL)

    assert config.model is SweepModel.BETA_HULL
    assert config.n == (2, 3)
    assert config.beta == (0.0, 1.5)
    assert config.N == (10, 100)
    assert config.log_N == (2.0,)
    assert config.seed == 42
    assert config.output_path == 'out.csv'
    assert config.mc == MonteCarloConfig(n_outer=20, n_inner=50, workers=1)
    assert config.eps == 0.25
    assert config.measures == (MeasureSpec(MeasureKind.GAUSSIAN_STD),)
    assert config.regions == (DualRegion.BALL,)
    assert config.hull_size_cap == HULL_SIZE_CAP
    assert config.dimension_cap == DIMENSION_CAP


def test_load_config_reads_binary_files():
    assert load_config(io.BytesIO(BETA_HULL.encode('utf-8'))) == loads_config(BETA_HULL)


def test_grid_points_of_beta_hull():
    points = grid_points(loads_config(BETA_HULL))

    assert len(points) == 12
    assert all(point.model is ThresholdModel.BETA for point in points)
    assert [point.N for point in points[:3]] == [8, 10, 100]
    assert (points[0].n, points[0].beta) == (2, 0.0)
    assert (points[-1].n, points[-1].beta) == (3, 1.5)


def test_critical_fractions():
    config = loads_config('''
[sweep]
model = "beta-hull"
[grid]
n = 4
beta = 0.0
critical_fractions = [0.5, 1.0]
''')

    assert [point.N for point in grid_points(config)] == [6, 32]


def test_general_rate_points():
    config = loads_config('''
[sweep]
model = "beta-hull"
[grid]
n = 4
beta = 0.0
rate = [1.0]
''')
    point, = grid_points(config)

    assert point.model is ThresholdModel.GENERAL_RATE
    assert point.rate == 1.0
    assert point.log_N == pytest.approx(2.5)


def test_beta_prime_comparison_points():
    config = loads_config('''
[sweep]
model = "beta-prime-hull"
[grid]
n = 2
beta = 10.0
sigma = 10.0
N = 100
compare = ["gaussian", "sphere"]
measures = ["gaussian", "ball-isotropic"]
''')

    models = [point.model for point in grid_points(config)]
    assert models == [ThresholdModel.BETA_PRIME, ThresholdModel.GAUSSIAN, ThresholdModel.SPHERE]
    assert len(config.measures) == 2


def test_fixed_dim_points():
    config = loads_config('''
[sweep]
model = "fixed-dim"
[grid]
n = 2
beta = [4.0, 6.0]
delta = 2.0
''')

    assert [point.N for point in grid_points(config)] == [16, 64]


def test_size_cap_override_is_logged(caplog):
    text = BETA_HULL.replace('seed = 42', 'seed = 42\nhull_size_cap = 500000')

    with caplog.at_level(logging.WARNING):
        config = loads_config(text)

    assert config.hull_size_cap == 500000
    assert 'size caps overridden' in caplog.text


@pytest.mark.parametrize('text', [
    'not toml = [',
    '[sweep]\nmodel = "beta-hull"\n[grid]\nn = 2\nbeta = 0.0\nN = 10\n[extra]\nkey = 1\n',
    '[sweep]\nmodel = "beta-hull"\ncolour = "red"\n[grid]\nn = 2\nbeta = 0.0\nN = 10\n',
    '[grid]\nn = 2\nbeta = 0.0\nN = 10\n',
    '[sweep]\nmodel = "beta-hull"\n[grid]\nbeta = 0.0\nN = 10\n',
    '[sweep]\nmodel = "beta-hull"\n[grid]\nn = 2\nN = 10\n',
    '[sweep]\nmodel = "cube"\n[grid]\nn = 2\nbeta = 0.0\nN = 10\n',
    '[sweep]\nmodel = "beta-hull"\n[grid]\nn = 2.5\nbeta = 0.0\nN = 10\n',
    '[sweep]\nmodel = "beta-hull"\n[grid]\nn = true\nbeta = 0.0\nN = 10\n',
    '[sweep]\nmodel = "beta-hull"\n[grid]\nn = 2\nbeta = "zero"\nN = 10\n',
    '[sweep]\nmodel = "beta-hull"\nseed = -1\n[grid]\nn = 2\nbeta = 0.0\nN = 10\n',
    '[sweep]\nmodel = "beta-hull"\n[grid]\nn = 2\nbeta = 0.0\n',
    '[sweep]\nmodel = "beta-hull"\n[grid]\nn = 2\nbeta = 0.0\nN = 10\n[mc]\nn_outer = 0\n',
    '[sweep]\nmodel = "beta-hull"\n[grid]\nn = 2\nbeta = -1.5\nN = 10\n',
    '[sweep]\nmodel = "beta-hull"\n[grid]\nn = 2\nbeta = 0.0\nN = 10\nmeasures = "cauchy"\n',
    'sweep = 3\n[grid]\nn = 2\nbeta = 0.0\nN = 10\n'
])
def test_invalid_configs(text):
    with pytest.raises(ConfigError):
        loads_config(text)


def test_invalid_binary_config():
    with pytest.raises(ConfigError):
        load_config(io.BytesIO(b'[sweep'))


@pytest.mark.parametrize('grid', [
    # beta - n/2 >> log n fails
    'n = 2\nbeta = 2.0\nN = 10\n',
    # no regime applies
    'n = 2\nbeta = 10.0\nsigma = 1.0\nN = 10\n',
    'n = 2\nbeta = 10.0\nsigma = 10.0\nN = 10\ncompare = ["beta"]\n'
])
def test_beta_prime_hypotheses(grid):
    with pytest.raises(ConfigError):
        loads_config(f'[sweep]\nmodel = "beta-prime-hull"\n[grid]\n{grid}')


def test_beta_prime_critical_fractions_are_supported():
    config = loads_config('[sweep]\nmodel = "beta-prime-hull"\n[grid]\nn = 2\nbeta = 10.0\n'
                          'sigma = 10.0\ncritical_fractions = [1.0]\n')

    # Regime (a): N* = ceil(3 n ln n)
    assert grid_points(config)[0].N == 5


@pytest.mark.parametrize('text', [
    '[sweep]\nmodel = "dual-beta-prime"\n[grid]\nn = 2\nbeta = 12.0\nN = 10\n',
    '[sweep]\nmodel = "dual-beta-prime"\n[grid]\nn = 2\nbeta = 5.0\nN = 10\nregions = ["measure"]\n',
    '[sweep]\nmodel = "dual-beta"\n[grid]\nn = 2\nbeta = 0.0\nR = 1.5\nN = 10\n',
    '[sweep]\nmodel = "dual-beta"\n[grid]\nn = 2\nbeta = 0.0\nR = 0.5\nN = 10\nregions = ["point"]\n',
    '[sweep]\nmodel = "dual-beta"\n[grid]\nn = 2\nbeta = 0.0\nR = 0.5\nN = 10\nregions = ["disk"]\n',
    '[sweep]\nmodel = "fixed-dim"\n[grid]\nn = 2\nbeta = 4.0\ndelta = 2.0\nR_inner = 0.75\n',
    '[sweep]\nmodel = "fixed-dim"\n[grid]\nn = 2\nbeta = 4.0\ndelta = 1.0\n'
])
def test_invalid_dual_and_fixed_dim_configs(text):
    with pytest.raises(ConfigError):
        loads_config(text)


def test_caps():
    with pytest.raises(CapacityError):
        loads_config('[sweep]\nmodel = "beta-hull"\n[grid]\nn = 2\nbeta = 0.0\nN = 300000\n')

    with pytest.raises(CapacityError):
        loads_config('[sweep]\nmodel = "beta-hull"\n[grid]\nn = 25\nbeta = 0.0\nN = 10\n')

    config = loads_config('[sweep]\nmodel = "beta-hull"\ndimension_cap = 30\n[grid]\nn = 25\nbeta = 0.0\nN = 10\n')
    assert grid_points(config)[0].n == 25
