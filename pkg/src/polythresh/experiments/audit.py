import logging
import math
import tomllib
from dataclasses import dataclass, fields
from typing import BinaryIO, Callable, Dict, List, Optional, Tuple

import numpy as np

from polythresh.core.bounds import Bounds
from polythresh.core.errors import ConfigError
from polythresh.core.law import BetaLaw, BetaPrimeLaw
from polythresh.dist.asymptotics import TailRegime, classify_tail, ftilde_asymptotic, log_laplace_tail
from polythresh.dist.criteria import power_tail_bounds
from polythresh.dist.tails import tail_F, tail_F_bounds, tail_Ftilde, tail_Ftilde_bounds_sigma1
from polythresh.specfun.gamma import gamma_ratio_half, wendel_bounds
from polythresh.specfun.quadrature import integrate_peaked

logger = logging.getLogger(__name__)

# Largest relative errors accepted for asymptotic formulas
ASYMPTOTIC_TOLERANCE = 0.05
LAPLACE_TOLERANCE = 0.01


@dataclass(frozen=True)
class AuditGrid:
    """
    Parameter grids of the bounds audit. The defaults reproduce the full audit.
    """
    wendel_x: Tuple[float, ...] = tuple(np.logspace(0.0, 6.0, 1001)[1:].tolist())
    beta_n: Tuple[int, ...] = tuple(range(1, 21))
    beta_beta: Tuple[float, ...] = (-0.5, 0.0, 1.0, 5.0, 20.0, 100.0)
    beta_d: Tuple[float, ...] = tuple(np.round(np.arange(1, 20) * 0.05, 2).tolist())
    prime_n: Tuple[int, ...] = tuple(range(1, 11))
    prime_offsets: Tuple[float, ...] = (0.5, 1.0, 2.0, 5.0, 10.0, 20.0)
    prime_d: Tuple[float, ...] = tuple(np.round(np.arange(11, 51) * 0.1, 1).tolist())
    gaussian_b: Tuple[float, ...] = (1e4, 1e5, 1e6)
    gaussian_a: Tuple[float, ...] = (0.0, 1.0, 3.0)
    polynomial_b: Tuple[float, ...] = (50.0, 500.0, 5000.0)
    polynomial_ratio: float = 100.0
    laplace_lambda: Tuple[float, ...] = (1e2, 1e3, 1e4)
    power_tail: Tuple[float, ...] = (1e-6, 1e-3, 0.01, 0.1, 0.25, 0.5)
    power_N: Tuple[float, ...] = (1.0, 10.0, 100.0, 1e4, 1e6)

    def __post_init__(self) -> None:
        if any(not x > 1 for x in self.wendel_x):
            raise ConfigError('wendel_x values must be > 1')

        if any(n < 1 for n in self.beta_n + self.prime_n):
            raise ConfigError('dimensions must be >= 1')

        if any(not beta > -1 for beta in self.beta_beta):
            raise ConfigError('beta_beta values violate beta > -1')

        if any(not 0 < d < 1 for d in self.beta_d):
            raise ConfigError('beta_d values must lie in (0, 1)')

        if any(not offset > 0 for offset in self.prime_offsets):
            raise ConfigError('prime_offsets values violate beta > (n + 1)/2')

        if any(not d > 1 for d in self.prime_d):
            raise ConfigError('prime_d values must be > 1')

        if any(not 0 <= tail <= 0.5 for tail in self.power_tail):
            raise ConfigError('power_tail values must lie in [0, 1/2]')


@dataclass(frozen=True)
class AuditRecord:
    section: str
    case: str
    value: float
    lower: float
    upper: float
    passed: bool
    relative_error: Optional[float] = None
    decade: Optional[int] = None


class AuditReport:
    """
    AuditReport collects audit records and summarizes them per section.
    """
    __slots__ = ('_records',)

    def __init__(self, records: Optional[List[AuditRecord]] = None):
        self._records: List[AuditRecord] = list(records or [])

    def add(self, record: AuditRecord) -> None:
        self._records.append(record)

    @property
    def records(self) -> List[AuditRecord]:
        return list(self._records)

    @property
    def violations(self) -> List[AuditRecord]:
        return [record for record in self._records if not record.passed]

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> Dict[str, Tuple[int, int]]:
        """
        Returns passed and total record counts per section, in order of appearance.

        :return: mapping section -> (passed, total)
        """
        counts: Dict[str, Tuple[int, int]] = {}
        for record in self._records:
            passed, total = counts.get(record.section, (0, 0))
            counts[record.section] = (passed + int(record.passed), total + 1)

        return counts

    def max_relative_errors(self) -> Dict[Tuple[str, int], float]:
        """
        Returns the largest relative error of asymptotic records per section and decade of b_n.

        :return: mapping (section, decade) -> largest relative error
        """
        errors: Dict[Tuple[str, int], float] = {}
        for record in self._records:
            if record.relative_error is None or record.decade is None:
                continue

            key = (record.section, record.decade)
            errors[key] = max(errors.get(key, 0.0), record.relative_error)

        return errors

    def format(self) -> str:
        """
        Renders the report as plain text: one line per section, one per asymptotic decade
        and one per violation.

        :return: report text
        """
        lines = []
        for section, (passed, total) in self.summary().items():
            lines.append(f'{section}: {passed}/{total} passed')

        for (section, decade), error in sorted(self.max_relative_errors().items()):
            lines.append(f'{section}: b_n ~ 1e{decade}: max relative error {error:.3e}')

        for record in self.violations:
            lines.append(f'VIOLATION {record.section} {record.case}: {record.value!r} not in '
                         f'[{record.lower!r}, {record.upper!r}]')

        return '\n'.join(lines)

    def __len__(self) -> int:
        return len(self._records)

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(records={len(self._records)}, violations={len(self.violations)})'


def _bounded(section: str, case: str, value: float, bounds: Bounds, strict: bool) -> AuditRecord:
    return AuditRecord(section, case, value, bounds.lower, bounds.upper, bounds.contains(value, strict=strict))


def _relative(section: str, case: str, value: float, approximation: float, tolerance: float,
              decade: Optional[int]) -> AuditRecord:
    error = abs(approximation / value - 1.0)
    return AuditRecord(section, case, value, value * (1 - tolerance), value * (1 + tolerance),
                       error < tolerance, relative_error=error, decade=decade)


def _audit_wendel(grid: AuditGrid, report: AuditReport) -> None:
    for x in grid.wendel_x:
        report.add(_bounded('gamma-ratio', f'x={x!r}', gamma_ratio_half(x), wendel_bounds(x), strict=True))


def _audit_beta_tail(grid: AuditGrid, report: AuditReport) -> None:
    for n in grid.beta_n:
        for beta in grid.beta_beta:
            # The bound needs beta + n/2 > 0
            if not beta + n / 2 > 0:
                continue

            law = BetaLaw(n, beta)
            for d in grid.beta_d:
                case = f'n={n} beta={beta!r} d={d!r}'
                report.add(_bounded('beta-tail', case, tail_F(law, d), tail_F_bounds(law, d), strict=True))


def _audit_beta_prime_tail(grid: AuditGrid, report: AuditReport) -> None:
    for n in grid.prime_n:
        for offset in grid.prime_offsets:
            law = BetaPrimeLaw(n, (n + 1) / 2 + offset, 1.0)
            for d in grid.prime_d:
                case = f'n={n} beta={law.beta!r} d={d!r}'
                bounds = tail_Ftilde_bounds_sigma1(law, d)
                report.add(_bounded('beta-prime-tail', case, tail_Ftilde(law, d), bounds, strict=True))


def _audit_asymptotics(grid: AuditGrid, report: AuditReport) -> None:
    cases = [(b, a) for b in grid.gaussian_b for a in grid.gaussian_a]
    cases += [(b, math.sqrt(grid.polynomial_ratio * b)) for b in grid.polynomial_b]

    for b, a in cases:
        regime = classify_tail(b, a)
        if regime.regime not in (TailRegime.GAUSSIAN_TAIL, TailRegime.POLYNOMIAL_TAIL):
            logger.info('skipping asymptotic case b = %g, a = %g in regime %s', b, a, regime.regime.value)
            continue

        # In one dimension with sigma^2 = 2b the rescaled distance a is the distance itself
        law = BetaPrimeLaw(1, b, math.sqrt(2 * b))
        exact = tail_Ftilde(law, a)
        section = f'asymptotic-{regime.regime.value}'
        report.add(_relative(section, f'b={b!r} a={a!r}', exact, ftilde_asymptotic(regime),
                             ASYMPTOTIC_TOLERANCE, int(math.floor(math.log10(b)))))


def _audit_laplace(grid: AuditGrid, report: AuditReport) -> None:
    a = 1 / math.sqrt(2)
    base = math.log1p(a * a)
    slope = 2 * a / (1 + a * a)

    def h(t: float) -> float:
        return math.log1p(t * t)

    for lam in grid.laplace_lambda:
        # Both sides are scaled by e^(lam h(a))
        def scaled(t: np.ndarray, lam: float = lam) -> np.ndarray:
            return np.exp(-lam * (np.log1p(t * t) - base))

        exact = integrate_peaked(scaled, a, math.inf, 1.0 / (lam * slope))
        approximation = math.exp(log_laplace_tail(h, slope, a, lam) + lam * base)
        report.add(_relative('laplace', f'lambda={lam!r}', exact, approximation, LAPLACE_TOLERANCE,
                             int(math.floor(math.log10(lam)))))


def _audit_power_tail(grid: AuditGrid, report: AuditReport) -> None:
    for tail in grid.power_tail:
        for N in grid.power_N:
            value = math.exp(N * math.log1p(-tail))
            report.add(_bounded('power-tail', f'F={tail!r} N={N!r}', value, power_tail_bounds(tail, N), strict=False))


_SECTIONS: List[Tuple[str, Callable[[AuditGrid, AuditReport], None]]] = [
    ('gamma-ratio', _audit_wendel),
    ('beta-tail', _audit_beta_tail),
    ('beta-prime-tail', _audit_beta_prime_tail),
    ('asymptotics', _audit_asymptotics),
    ('laplace', _audit_laplace),
    ('power-tail', _audit_power_tail)
]


def run_bounds_audit(grid: Optional[AuditGrid] = None) -> AuditReport:
    """
    Checks every analytic sandwich and asymptotic formula of the tail functions against
    quadrature over parameter grids. Violations are report content, not errors.

    :param grid: parameter grids (default: AuditGrid())
    :return: report with one record per checked case
    """
    grid = AuditGrid() if grid is None else grid
    report = AuditReport()

    for name, section in _SECTIONS:
        before = len(report)
        section(grid, report)
        logger.info('audit section %s: %d cases', name, len(report) - before)

    return report


def load_audit_grid(file: BinaryIO) -> AuditGrid:
    """
    Reads an audit grid from a TOML file whose top-level keys are AuditGrid fields.
    Missing keys keep their defaults.

    :param file: binary file-like object
    :return: validated grid
    """
    try:
        data = tomllib.load(file)
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f'invalid TOML: {e}') from None

    names = {field.name for field in fields(AuditGrid)}
    unknown = sorted(set(data) - names)
    if unknown:
        raise ConfigError(f'unknown audit grid keys: {", ".join(unknown)}')

    values = {key: tuple(value) if isinstance(value, list) else value for key, value in data.items()}
    return AuditGrid(**values)
