import os

import pytest

from polythresh.core.errors import ConfigError
from polythresh.core.estimate import Estimate
from polythresh.montecarlo.runner import (
    THREADS_VARIABLE,
    MonteCarloConfig,
    run_coupled,
    run_replicas,
    worker_count
)
from polythresh.sampler.stream import RngStream


def _uniform(stream: RngStream) -> float:
    return float(stream.generator.random())


def _pair(stream: RngStream) -> list:
    value = float(stream.generator.random())
    return [value, 2 * value]


def test_config_defaults():
    cfg = MonteCarloConfig()

    assert cfg.n_outer == 200
    assert cfg.n_inner == 500
    assert cfg.n_directions == 256
    assert cfg.workers is None


@pytest.mark.parametrize('kwargs', [
    {'n_outer': 0},
    {'n_inner': 0},
    {'n_directions': 0},
    {'workers': 0}
])
def test_config_rejects_non_positive_sizes(kwargs):
    with pytest.raises(ValueError):
        MonteCarloConfig(**kwargs)


def test_worker_count_prefers_config(monkeypatch):
    monkeypatch.setenv(THREADS_VARIABLE, '5')

    assert worker_count(MonteCarloConfig(workers=2)) == 2
    assert worker_count(MonteCarloConfig()) == 5
    assert worker_count() == 5


def test_worker_count_defaults_to_cpu_count(monkeypatch):
    monkeypatch.delenv(THREADS_VARIABLE, raising=False)
    assert worker_count() == (os.cpu_count() or 1)

    monkeypatch.setenv(THREADS_VARIABLE, ' ')
    assert worker_count() == (os.cpu_count() or 1)


@pytest.mark.parametrize('value', ['abc', '0', '-3', '1.5'])
def test_worker_count_rejects_invalid_variable(monkeypatch, value):
    monkeypatch.setenv(THREADS_VARIABLE, value)

    with pytest.raises(ConfigError):
        worker_count()


def test_run_replicas_does_not_depend_on_threads():
    serial = run_replicas(_uniform, MonteCarloConfig(n_outer=37, workers=1), RngStream(5))
    threaded = run_replicas(_uniform, MonteCarloConfig(n_outer=37, workers=4), RngStream(5))

    assert serial == threaded
    assert serial.n_outer == 37
    assert serial.seed == RngStream(5).integer_seed()
    assert 0.0 < serial.mean < 1.0
    assert serial.std_err > 0.0


def test_run_replicas_depends_on_seed():
    first = run_replicas(_uniform, MonteCarloConfig(n_outer=10, workers=1), RngStream(1))
    second = run_replicas(_uniform, MonteCarloConfig(n_outer=10, workers=1), RngStream(2))

    assert first.mean != second.mean


def test_run_replicas_reports_inner_size():
    cfg = MonteCarloConfig(n_outer=3, n_inner=17, workers=1)

    assert run_replicas(_uniform, cfg, RngStream(0)).n_inner == 17
    assert run_replicas(_uniform, cfg, RngStream(0), n_inner=1).n_inner == 1


def test_run_replicas_consumes_parent_stream():
    rng = RngStream(9)
    cfg = MonteCarloConfig(n_outer=4, workers=1)

    first = run_replicas(_uniform, cfg, rng)
    second = run_replicas(_uniform, cfg, rng)

    assert first.mean != second.mean


def test_run_coupled_returns_one_estimate_per_variant():
    cfg = MonteCarloConfig(n_outer=20, workers=3)
    first, second = run_coupled(_pair, cfg, RngStream(4))

    assert second.mean == pytest.approx(2 * first.mean)
    assert second.std_err == pytest.approx(2 * first.std_err)
    assert first == run_replicas(_uniform, cfg, RngStream(4))


def test_estimate_seed_reproduces_replicas():
    rng = RngStream(11)
    rng.generator.random(3)
    cfg = MonteCarloConfig(n_outer=12, workers=2)

    estimate = run_replicas(_uniform, cfg, rng)
    replayed = Estimate.from_replicas([_uniform(RngStream(estimate.seed, i)) for i in range(12)],
                                      n_inner=cfg.n_inner, seed=estimate.seed)

    assert estimate == replayed

    columns = run_coupled(_pair, cfg, RngStream(11))
    assert columns[0].seed == columns[1].seed == RngStream(11).integer_seed()
