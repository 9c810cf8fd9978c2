from typing import Sequence

from .audit import AuditGrid, AuditRecord, AuditReport, run_bounds_audit, load_audit_grid
from .config import (
    HULL_SIZE_CAP,
    DIMENSION_CAP,
    DEFAULT_SEED,
    SweepModel,
    DualRegion,
    GridPoint,
    SweepConfig,
    size_from_log,
    row_seed,
    check_fixed_dim,
    grid_points,
    parse_config,
    load_config,
    loads_config
)
from .sweeps import (
    VIOLATION_SIGMAS,
    predicted_side,
    is_violation,
    run_beta_threshold_sweep,
    run_beta_prime_regimes,
    run_dual_sweep,
    run_fixed_dim_threshold,
    run_sweep
)

__all__: Sequence[str] = [
    'HULL_SIZE_CAP',
    'DIMENSION_CAP',
    'DEFAULT_SEED',
    'SweepModel',
    'DualRegion',
    'GridPoint',
    'SweepConfig',
    'size_from_log',
    'row_seed',
    'check_fixed_dim',
    'grid_points',
    'parse_config',
    'load_config',
    'loads_config',
    'VIOLATION_SIGMAS',
    'predicted_side',
    'is_violation',
    'run_beta_threshold_sweep',
    'run_beta_prime_regimes',
    'run_dual_sweep',
    'run_fixed_dim_threshold',
    'run_sweep',
    'AuditGrid',
    'AuditRecord',
    'AuditReport',
    'run_bounds_audit',
    'load_audit_grid'
]
