from typing import Sequence

from .estimators import (
    PLANES_PER_REPLICA,
    VolumeMethod,
    InclusionMode,
    OffsetMode,
    estimate_volume_ratio,
    estimate_volume_ratio_curve,
    estimate_measure_content,
    estimate_measure_content_curve,
    estimate_point_membership,
    estimate_inclusion_prob,
    estimate_hull_in_ball,
    estimate_mean_width_ratio,
    estimate_intrinsic_identity,
    estimate_dual_content,
    estimate_dual_content_curve
)
from .measure import MeasureKind, MeasureSpec, ScaledBall, Annulus, MeasureRegion, PointRegion, Region
from .runner import (
    DEFAULT_OUTER,
    DEFAULT_INNER,
    DEFAULT_DIRECTIONS,
    THREADS_VARIABLE,
    MonteCarloConfig,
    worker_count,
    run_replicas,
    run_coupled
)

__all__: Sequence[str] = [
    'DEFAULT_OUTER',
    'DEFAULT_INNER',
    'DEFAULT_DIRECTIONS',
    'THREADS_VARIABLE',
    'MonteCarloConfig',
    'worker_count',
    'run_replicas',
    'run_coupled',
    'MeasureKind',
    'MeasureSpec',
    'ScaledBall',
    'Annulus',
    'MeasureRegion',
    'PointRegion',
    'Region',
    'PLANES_PER_REPLICA',
    'VolumeMethod',
    'InclusionMode',
    'OffsetMode',
    'estimate_volume_ratio',
    'estimate_volume_ratio_curve',
    'estimate_measure_content',
    'estimate_measure_content_curve',
    'estimate_point_membership',
    'estimate_inclusion_prob',
    'estimate_hull_in_ball',
    'estimate_mean_width_ratio',
    'estimate_intrinsic_identity',
    'estimate_dual_content',
    'estimate_dual_content_curve'
]
