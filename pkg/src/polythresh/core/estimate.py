import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class Estimate:
    """
    Monte Carlo estimate of an expectation. Polytope replicas are the unit of independence:
    ``std_err`` is the standard error of the mean over the ``n_outer`` replica means,
    each of which averages ``n_inner`` query points.
    """
    mean: float
    std_err: float
    n_outer: int
    n_inner: int
    seed: int

    def __post_init__(self) -> None:
        if not self.std_err >= 0:
            raise ValueError('std_err must be non-negative')

        if self.n_outer < 1:
            raise ValueError('n_outer must be >= 1')

        if self.n_inner < 0:
            raise ValueError('n_inner must be non-negative')

    @classmethod
    def from_replicas(cls, values: Sequence[float], n_inner: int, seed: int) -> 'Estimate':
        """
        Builds estimate from per-replica means.

        >>> Estimate.from_replicas([0.0, 2.0], n_inner=1, seed=7)
        Estimate(mean=1.0, std_err=1.0, n_outer=2, n_inner=1, seed=7)

        :param values: per-replica means, in replica order
        :param n_inner: number of query points per replica
        :param seed: key of the replica streams; replica i draws from RngStream(seed, i)
        :return: estimate with the standard error of the mean
        """
        array = np.asarray(values, dtype=float)

        if array.size < 1:
            raise ValueError('at least one replica is required')

        mean = float(np.mean(array))
        if array.size > 1:
            std_err = float(np.std(array, ddof=1) / math.sqrt(array.size))
        else:
            std_err = 0.0

        return cls(mean=mean, std_err=std_err, n_outer=int(array.size), n_inner=n_inner, seed=seed)

    def agrees_with(self, value: float, k: float = 3.0) -> bool:
        """
        Checks whether a reference value lies within k standard errors of the mean.

        :param value: reference value
        :param k: number of standard errors (default: 3.0)
        :return: True if ``|mean - value| <= k * std_err``
        """
        return abs(self.mean - value) <= k * self.std_err

    def agrees_with_estimate(self, other: 'Estimate', k: float = 3.0) -> bool:
        """
        Checks whether two independent estimates agree within k joint standard errors.

        :param other: independent estimate of the same quantity
        :param k: number of joint standard errors (default: 3.0)
        :return: True if ``|mean1 - mean2| <= k * sqrt(se1^2 + se2^2)``
        """
        joint = math.hypot(self.std_err, other.std_err)
        return abs(self.mean - other.mean) <= k * joint
