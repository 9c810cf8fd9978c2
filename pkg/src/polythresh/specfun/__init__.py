from typing import Sequence

from .gamma import (
    log_gamma,
    log_gamma_ratio_half,
    gamma_ratio_half,
    wendel_bounds,
    ball_volume_log,
    sphere_area_log,
    log_binomial,
    beta_norm_const_log,
    marginal_const,
    beta_prime_consts
)
from .quadrature import QuadratureSpec, integrate, integrate_endpoint_singular, integrate_peaked

__all__: Sequence[str] = [
    'log_gamma',
    'log_gamma_ratio_half',
    'gamma_ratio_half',
    'wendel_bounds',
    'ball_volume_log',
    'sphere_area_log',
    'log_binomial',
    'beta_norm_const_log',
    'marginal_const',
    'beta_prime_consts',
    'QuadratureSpec',
    'integrate',
    'integrate_endpoint_singular',
    'integrate_peaked'
]
