import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from polythresh.core.errors import ConfigError
from polythresh.core.estimate import Estimate
from polythresh.sampler.stream import RngStream

logger = logging.getLogger(__name__)

DEFAULT_OUTER = 200
DEFAULT_INNER = 500
DEFAULT_DIRECTIONS = 256

THREADS_VARIABLE = 'POLYTHRESH_THREADS'


@dataclass(frozen=True)
class MonteCarloConfig:
    """
    Sizes of a two-level Monte Carlo run: ``n_outer`` independent polytope replicas, each
    tested with ``n_inner`` query points or ``n_directions`` random directions.
    ``workers`` overrides the thread count; it never changes results.
    """
    n_outer: int = DEFAULT_OUTER
    n_inner: int = DEFAULT_INNER
    n_directions: int = DEFAULT_DIRECTIONS
    workers: Optional[int] = None

    def __post_init__(self) -> None:
        if self.n_outer < 1:
            raise ValueError('n_outer must be >= 1')

        if self.n_inner < 1:
            raise ValueError('n_inner must be >= 1')

        if self.n_directions < 1:
            raise ValueError('n_directions must be >= 1')

        if self.workers is not None and self.workers < 1:
            raise ValueError('workers must be >= 1')


def worker_count(cfg: Optional[MonteCarloConfig] = None) -> int:
    """
    Returns number of worker threads: ``cfg.workers`` if set, then the
    POLYTHRESH_THREADS environment variable, then the number of CPUs.

    :param cfg: run configuration (default: None)
    :return: positive thread count
    """
    if cfg is not None and cfg.workers is not None:
        return cfg.workers

    value = os.environ.get(THREADS_VARIABLE)
    if value is None or value.strip() == '':
        return os.cpu_count() or 1

    try:
        count = int(value)
    except ValueError:
        raise ConfigError(f'{THREADS_VARIABLE} must be a positive integer, got {value!r}') from None

    if count < 1:
        raise ConfigError(f'{THREADS_VARIABLE} must be a positive integer, got {value!r}')

    return count


def _map_replicas(
        replica: Callable[[RngStream], np.ndarray],
        cfg: MonteCarloConfig,
        rng: RngStream
) -> Tuple[int, np.ndarray]:
    # Replica i always draws from stream i of a key taken from the parent stream,
    # and results are collected in index order
    key = rng.integer_seed()
    streams = [RngStream(key, index) for index in range(cfg.n_outer)]
    workers = min(worker_count(cfg), cfg.n_outer)

    logger.debug('running %d replicas on %d threads', cfg.n_outer, workers)

    if workers == 1:
        values = [replica(stream) for stream in streams]
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            values = list(executor.map(replica, streams))

    return key, np.array(values, dtype=float).reshape(cfg.n_outer, -1)


def run_replicas(
        replica: Callable[[RngStream], float],
        cfg: MonteCarloConfig,
        rng: RngStream,
        n_inner: Optional[int] = None
) -> Estimate:
    """
    Evaluates ``replica`` on ``cfg.n_outer`` independent streams and reduces the
    per-replica means into an Estimate. The result depends only on the state of ``rng``
    and ``cfg``, never on the number of threads.

    :param replica: function of a random stream returning one replica mean
    :param cfg: run configuration
    :param rng: parent stream; one 63-bit key is drawn from it
    :param n_inner: inner sample size reported in the estimate (default: cfg.n_inner)
    :return: estimate over the replicas; its seed is the key, and replica i reads RngStream(key, i)
    """
    key, values = _map_replicas(replica, cfg, rng)
    inner = cfg.n_inner if n_inner is None else n_inner

    return Estimate.from_replicas(values[:, 0], n_inner=inner, seed=key)


def run_coupled(
        replica: Callable[[RngStream], Sequence[float]],
        cfg: MonteCarloConfig,
        rng: RngStream,
        n_inner: Optional[int] = None
) -> List[Estimate]:
    """
    Like ``run_replicas`` for replicas returning one mean per coupled variant, e.g. per
    polytope size when the larger polytopes reuse the points of the smaller ones.

    :param replica: function of a random stream returning a fixed-length sequence of means
    :param cfg: run configuration
    :param rng: parent stream; one 63-bit key is drawn from it
    :param n_inner: inner sample size reported in the estimates (default: cfg.n_inner)
    :return: one estimate per variant, in replica output order
    """
    key, values = _map_replicas(replica, cfg, rng)
    inner = cfg.n_inner if n_inner is None else n_inner

    return [Estimate.from_replicas(column, n_inner=inner, seed=key) for column in values.T]
