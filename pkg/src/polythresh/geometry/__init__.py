from typing import Sequence

from .halfspace import contains_halfspace_poly, contains_halfspace_many
from .hull import (
    support_function,
    support_values,
    contains_hull,
    contains_hull_many,
    contains_hull_2d,
    interval_hull_1d,
    convex_hull_2d,
    hull_area_2d,
    ball_in_hull_2d,
    hull_in_ball
)
from .simplex import LP_TOLERANCE, phase_one_residual, in_convex_hull

__all__: Sequence[str] = [
    'LP_TOLERANCE',
    'phase_one_residual',
    'in_convex_hull',
    'support_function',
    'support_values',
    'contains_hull',
    'contains_hull_many',
    'contains_hull_2d',
    'interval_hull_1d',
    'convex_hull_2d',
    'hull_area_2d',
    'ball_in_hull_2d',
    'hull_in_ball',
    'contains_halfspace_poly',
    'contains_halfspace_many'
]
