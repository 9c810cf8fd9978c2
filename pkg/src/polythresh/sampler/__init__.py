from typing import Sequence

from .points import (
    PointMeasure,
    sample_unit_sphere,
    sample_points,
    sample_beta_point,
    sample_beta_prime_point,
    sample_uniform_ball,
    sample_gaussian_point,
    thin_shell_fraction
)
from .stream import RngStream
from .variates import sample_gamma, sample_log_gamma, sample_beta_scalar, sample_log_odds

__all__: Sequence[str] = [
    'RngStream',
    'sample_gamma',
    'sample_log_gamma',
    'sample_beta_scalar',
    'sample_log_odds',
    'PointMeasure',
    'sample_unit_sphere',
    'sample_points',
    'sample_beta_point',
    'sample_beta_prime_point',
    'sample_uniform_ball',
    'sample_gaussian_point',
    'thin_shell_fraction'
]
