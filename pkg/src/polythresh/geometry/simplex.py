import logging
from typing import Optional

import numpy as np

from polythresh.core.errors import DegeneracyError

logger = logging.getLogger(__name__)

LP_TOLERANCE = 1e-9

_PIVOT_TOLERANCE = 1e-12
_ITERATIONS_PER_COLUMN = 50


def _pivot(tableau: np.ndarray, row: int, column: int) -> None:
    tableau[row] /= tableau[row, column]

    factors = tableau[:, column].copy()
    factors[row] = 0.0
    tableau -= np.outer(factors, tableau[row])


def phase_one_residual(matrix: np.ndarray, rhs: np.ndarray, max_iterations: Optional[int] = None) -> float:
    """
    Solves the phase-one problem of ``matrix @ lam = rhs, lam >= 0`` with a dense tableau simplex
    and returns the optimal sum of artificial variables, which is zero iff the system is feasible.

    Entering columns and leaving rows are chosen by Bland's rule (smallest index first), which
    rules out cycling on degenerate vertices.

    >>> phase_one_residual(np.array([[1.0, 1.0]]), np.array([2.0]))
    0.0

    :param matrix: coefficient matrix of shape (m, N)
    :param rhs: right-hand side of shape (m,)
    :param max_iterations: pivot cap, defaults to 50 (N + m)
    :return: minimal l1 residual of the system over lam >= 0
    """
    matrix = np.asarray(matrix, dtype=float)
    rhs = np.asarray(rhs, dtype=float)

    rows, columns = matrix.shape
    if rhs.shape != (rows,):
        raise ValueError('rhs must have one entry per row of matrix')

    if max_iterations is None:
        max_iterations = _ITERATIONS_PER_COLUMN * (columns + rows)

    # Artificial variables need a non-negative right-hand side
    signs = np.where(rhs < 0, -1.0, 1.0)

    tableau = np.zeros((rows + 1, columns + rows + 1))
    tableau[:rows, :columns] = matrix * signs[:, np.newaxis]
    tableau[:rows, columns:columns + rows] = np.eye(rows)
    tableau[:rows, -1] = rhs * signs

    # Reduced costs of the phase-one objective, which sums the artificial variables
    tableau[rows, :columns] = -tableau[:rows, :columns].sum(axis=0)
    tableau[rows, -1] = -tableau[:rows, -1].sum()

    basis = np.arange(columns, columns + rows)

    pivots = 0
    while True:
        entering = np.flatnonzero(tableau[rows, :-1] < -_PIVOT_TOLERANCE)
        if entering.size == 0:
            break

        if pivots >= max_iterations:
            raise DegeneracyError(f'simplex exceeded {max_iterations} pivots')

        column = entering[0]
        candidates = np.flatnonzero(tableau[:rows, column] > _PIVOT_TOLERANCE)

        if candidates.size == 0:
            # The phase-one objective is bounded below by zero
            raise DegeneracyError('simplex found an unbounded phase-one direction')

        ratios = tableau[candidates, -1] / tableau[candidates, column]
        tied = candidates[ratios <= ratios.min() + _PIVOT_TOLERANCE]
        row = tied[np.argmin(basis[tied])]

        _pivot(tableau, row, column)
        basis[row] = column
        pivots += 1

    logger.debug('phase one finished after %d pivots on %d columns', pivots, columns)
    return max(0.0, float(-tableau[rows, -1]))


def in_convex_hull(points: np.ndarray, x: np.ndarray, tolerance: float = LP_TOLERANCE) -> bool:
    """
    Decides whether ``x`` is a convex combination of the rows of ``points``, i.e. whether
    ``sum(lam_i X_i) = x``, ``sum(lam_i) = 1`` has a solution with ``lam >= 0``.
    Points within ``tolerance`` of the hull are reported inside.

    >>> in_convex_hull(np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]), np.array([0.25, 0.25]))
    True

    :param points: array of shape (N, n)
    :param x: array of shape (n,)
    :param tolerance: feasibility tolerance on the residual (default: LP_TOLERANCE)
    :return: True iff x lies in the closed hull
    """
    matrix = np.vstack((points.T, np.ones(points.shape[0])))
    rhs = np.append(x, 1.0)

    residual = phase_one_residual(matrix, rhs)
    return residual <= tolerance * (1.0 + float(np.max(np.abs(rhs))))
