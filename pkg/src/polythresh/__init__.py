from typing import Sequence

from . import core
from . import specfun
from . import dist
from . import sampler
from . import geometry
from . import montecarlo
from . import io
from . import experiments

__all__: Sequence[str] = [
    'core',
    'specfun',
    'dist',
    'sampler',
    'geometry',
    'montecarlo',
    'io',
    'experiments'
]
