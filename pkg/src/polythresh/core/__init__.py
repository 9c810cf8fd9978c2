from typing import Sequence

from .bounds import Bounds
from .errors import (
    PolythreshError,
    DomainError,
    RegimeError,
    ConvergenceError,
    DegeneracyError,
    CapacityError,
    ConfigError
)
from .estimate import Estimate
from .law import BetaLaw, BetaPrimeLaw, SphereLaw, GaussianLaw, TailLaw, VertexLaw
from .polytope import PointCloudPolytope, HalfspacePolytope

__all__: Sequence[str] = [
    'Bounds',
    'Estimate',
    'BetaLaw',
    'BetaPrimeLaw',
    'SphereLaw',
    'GaussianLaw',
    'TailLaw',
    'VertexLaw',
    'PointCloudPolytope',
    'HalfspacePolytope',
    'PolythreshError',
    'DomainError',
    'RegimeError',
    'ConvergenceError',
    'DegeneracyError',
    'CapacityError',
    'ConfigError'
]
