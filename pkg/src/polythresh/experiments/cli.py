import argparse
import csv
import json
import logging
import math
import sys
from typing import Any, Dict, List, Optional, Sequence, TextIO

import numpy as np

from polythresh.core.errors import DomainError, PolythreshError
from polythresh.core.law import BetaLaw, BetaPrimeLaw, GaussianLaw, SphereLaw, VertexLaw
from polythresh.dist.tails import tail_F, tail_F_bounds, tail_Ftilde, tail_Ftilde_bounds_sigma1
from polythresh.experiments.audit import load_audit_grid, run_bounds_audit
from polythresh.experiments.config import load_config, size_from_log
from polythresh.experiments.sweeps import run_sweep
from polythresh.io import table
from polythresh.montecarlo.estimators import (
    InclusionMode,
    OffsetMode,
    estimate_dual_content,
    estimate_hull_in_ball,
    estimate_inclusion_prob,
    estimate_mean_width_ratio,
    estimate_measure_content,
    estimate_point_membership,
    estimate_volume_ratio
)
from polythresh.montecarlo.measure import MeasureKind, MeasureRegion, MeasureSpec, PointRegion, ScaledBall
from polythresh.montecarlo.runner import DEFAULT_DIRECTIONS, DEFAULT_INNER, DEFAULT_OUTER, MonteCarloConfig
from polythresh.sampler.points import sample_points
from polythresh.sampler.stream import RngStream

logger = logging.getLogger(__name__)

LAWS = ('beta', 'beta-prime', 'sphere', 'gaussian')
QUANTITIES = ('volume-ratio', 'content', 'inclusion', 'membership', 'mean-width', 'dual', 'hull-in-ball')


def parse_grid(text: str) -> np.ndarray:
    """
    Parses an inclusive grid ``a:b:step``.

    >>> parse_grid('0.1:0.3:0.1').tolist()
    [0.1, 0.2, 0.3]

    :param text: grid specification
    :return: grid values
    """
    try:
        start, stop, step = (float(part) for part in text.split(':'))
    except ValueError:
        raise argparse.ArgumentTypeError(f'grid must have the form a:b:step, got {text!r}') from None

    if not step > 0 or stop < start:
        raise argparse.ArgumentTypeError('grid needs step > 0 and b >= a')

    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return np.round(start + step * np.arange(count), 12)


def parse_point(text: str) -> np.ndarray:
    try:
        return np.array([float(part) for part in text.split(',')], dtype=float)
    except ValueError:
        raise argparse.ArgumentTypeError(f'point must be comma-separated numbers, got {text!r}') from None


def make_law(model: str, n: int, beta: Optional[float], sigma: float) -> VertexLaw:
    """
    Builds the law named on the command line.

    :param model: one of LAWS
    :param n: dimension
    :param beta: shape parameter, required for beta and beta-prime
    :param sigma: scale of the beta-prime law
    :return: law object
    """
    if model == 'sphere':
        return SphereLaw(n)

    if model == 'gaussian':
        return GaussianLaw(n)

    if beta is None:
        raise DomainError(f'--beta is required for the {model} model')

    if model == 'beta':
        return BetaLaw(n, beta)

    return BetaPrimeLaw(n, beta, sigma)


def tabulate_tails(law: VertexLaw, grid: Sequence[float], bounds: bool) -> List[Dict[str, Any]]:
    """
    Tabulates the tail function of a beta or beta-prime law, optionally with its analytic
    bounds where they apply (empty otherwise).

    :param law: beta or beta-prime law
    :param grid: distances
    :param bounds: whether to add the bound columns
    :return: one record per distance
    """
    records = []

    for d in grid:
        d = float(d)

        if isinstance(law, BetaLaw):
            value = tail_F(law, d) if d <= 1 else 0.0
            applies = 0 < d < 1 and law.beta + law.n / 2 > 0
            bound = tail_F_bounds(law, d) if applies else None
        elif isinstance(law, BetaPrimeLaw):
            value = tail_Ftilde(law, d)
            applies = law.sigma == 1.0 and d > 1 and law.beta > (law.n + 1) / 2
            bound = tail_Ftilde_bounds_sigma1(law, d) if applies else None
        else:
            raise DomainError('tabulate supports the beta and beta-prime models')

        record: Dict[str, Any] = {'d': d, 'tail': value}
        if bounds:
            record['lower'] = None if bound is None else bound.lower
            record['upper'] = None if bound is None else bound.upper
        records.append(record)

    return records


def _open_output(path: Optional[str]) -> TextIO:
    if path is None or path == '-':
        return sys.stdout

    return open(path, 'w', newline='')


def _close_output(file: TextIO) -> None:
    if file is not sys.stdout:
        file.close()


def _cell(value: Any) -> str:
    if value is None:
        return ''

    if isinstance(value, float):
        return format(value, '.17g')

    return str(value)


def _command_tabulate(args: argparse.Namespace) -> int:
    law = make_law(args.model, args.n, args.beta, args.sigma)
    records = tabulate_tails(law, args.d_grid, args.bounds)

    if args.json is not None:
        file = _open_output(args.json)
        json.dump(records, file, indent=2)
        file.write('\n')
        _close_output(file)
        return 0

    file = _open_output(args.csv)
    writer = csv.writer(file, lineterminator='\n')
    writer.writerow(list(records[0]))
    for record in records:
        writer.writerow([_cell(value) for value in record.values()])
    _close_output(file)

    return 0


def _command_sample(args: argparse.Namespace) -> int:
    law = make_law(args.model, args.n, args.beta, args.sigma)
    points = sample_points(law, args.count, RngStream(args.seed))

    file = _open_output(args.out)
    table.dump_points(points, file)
    _close_output(file)

    return 0


def _estimate(args: argparse.Namespace) -> Any:
    law = make_law(args.model, args.n, args.beta, args.sigma)
    N = args.N if args.N is not None else size_from_log(args.lnN)
    cfg = MonteCarloConfig(n_outer=args.outer, n_inner=args.inner, n_directions=args.directions)
    rng = RngStream(args.seed)
    measure = MeasureSpec(args.measure)

    if args.quantity == 'volume-ratio':
        return estimate_volume_ratio(law, N, cfg, rng)

    if args.quantity == 'content':
        return estimate_measure_content(law, N, measure, cfg, rng)

    if args.quantity == 'mean-width':
        return estimate_mean_width_ratio(law, N, cfg, rng)

    if args.quantity == 'membership':
        if args.x is None:
            raise DomainError('--x is required for membership')
        return estimate_point_membership(law, N, args.x, cfg, rng)

    if args.quantity in ('inclusion', 'hull-in-ball'):
        if args.R is None:
            raise DomainError(f'--R is required for {args.quantity}')

        if args.quantity == 'hull-in-ball':
            return estimate_hull_in_ball(law, N, args.R, cfg, rng)

        mode = args.mode or (InclusionMode.EXACT_2D.value if args.n == 2 else InclusionMode.DIRECTION_SAMPLED.value)
        return estimate_inclusion_prob(law, N, args.R, InclusionMode(mode), cfg, rng)

    offset_mode = OffsetMode.ONE if isinstance(law, BetaLaw) else OffsetMode.DIM_N
    if args.x is not None:
        region = PointRegion(args.x)
    elif args.R is not None:
        region = ScaledBall(1.0 / args.R)
    else:
        region = MeasureRegion(measure)

    return estimate_dual_content(law, N, offset_mode, region, cfg, rng)


def _command_estimate(args: argparse.Namespace) -> int:
    estimate = _estimate(args)

    record = {
        'quantity': args.quantity,
        'model': args.model,
        'mean': estimate.mean,
        'std_err': estimate.std_err,
        'n_outer': estimate.n_outer,
        'n_inner': estimate.n_inner,
        'seed': args.seed,
        'replica_seed': estimate.seed
    }
    print(json.dumps(record))

    return 0


def _command_sweep(args: argparse.Namespace) -> int:
    with open(args.config, 'rb') as f:
        config = load_config(f)

    rows = run_sweep(config)
    logger.info('sweep finished with %d rows', len(rows))

    file = _open_output(args.out or config.output_path)
    table.dump(rows, file, format=args.format)
    _close_output(file)

    return 1 if any(row.violation for row in rows) else 0


def _command_audit(args: argparse.Namespace) -> int:
    if args.grid == 'default':
        grid = None
    else:
        with open(args.grid, 'rb') as f:
            grid = load_audit_grid(f)

    report = run_bounds_audit(grid)
    print(report.format())

    return 0 if report.passed else 1


def _add_law_arguments(parser: argparse.ArgumentParser, models: Sequence[str]) -> None:
    parser.add_argument('--model', choices=models, required=True, help='law of the points')
    parser.add_argument('--n', type=int, required=True, help='dimension')
    parser.add_argument('--beta', type=float, help='shape parameter')
    parser.add_argument('--sigma', type=float, default=1.0, help='scale of the beta-prime law (default: 1.0)')


def build_parser() -> argparse.ArgumentParser:
    """
    Builds the command line parser with the subcommands tabulate, sample, estimate, sweep and audit.

    :return: argument parser
    """
    parser = argparse.ArgumentParser(prog='polythresh', description='Threshold phenomena for random polytopes')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v for info, -vv for debug logging')
    commands = parser.add_subparsers(dest='command', required=True)

    tabulate = commands.add_parser('tabulate', help='tabulate tail functions and their bounds')
    _add_law_arguments(tabulate, ('beta', 'beta-prime'))
    tabulate.add_argument('--d-grid', type=parse_grid, required=True, help='distances as a:b:step')
    tabulate.add_argument('--bounds', action='store_true', help='add analytic bounds')
    output = tabulate.add_mutually_exclusive_group()
    output.add_argument('--json', metavar='PATH', help='write JSON')
    output.add_argument('--csv', metavar='PATH', help='write CSV (default: stdout)')
    tabulate.set_defaults(handler=_command_tabulate)

    sample = commands.add_parser('sample', help='write random points, one per line')
    _add_law_arguments(sample, LAWS)
    sample.add_argument('--count', type=int, required=True, help='number of points')
    sample.add_argument('--seed', type=int, required=True, help='master seed')
    sample.add_argument('--out', metavar='PATH', help='output file (default: stdout)')
    sample.set_defaults(handler=_command_sample)

    estimate = commands.add_parser('estimate', help='run one Monte Carlo estimator')
    estimate.add_argument('--quantity', choices=QUANTITIES, required=True)
    _add_law_arguments(estimate, LAWS)
    size = estimate.add_mutually_exclusive_group(required=True)
    size.add_argument('--N', type=int, help='number of points')
    size.add_argument('--lnN', type=float, help='natural logarithm of the number of points')
    estimate.add_argument('--outer', type=int, default=DEFAULT_OUTER, help='polytope replicas')
    estimate.add_argument('--inner', type=int, default=DEFAULT_INNER, help='query points per replica')
    estimate.add_argument('--directions', type=int, default=DEFAULT_DIRECTIONS, help='directions per replica')
    estimate.add_argument('--seed', type=int, required=True, help='master seed')
    estimate.add_argument('--measure', choices=[kind.value for kind in MeasureKind],
                          default='gaussian', help='measure of the query points')
    estimate.add_argument('--R', type=float, help='ball radius')
    estimate.add_argument('--x', type=parse_point, help='point as comma-separated coordinates')
    estimate.add_argument('--mode', choices=[mode.value for mode in InclusionMode], help='inclusion test')
    estimate.set_defaults(handler=_command_estimate)

    sweep = commands.add_parser('sweep', help='run a sweep from a TOML configuration')
    sweep.add_argument('--config', required=True, metavar='PATH', help='sweep configuration')
    sweep.add_argument('--out', metavar='PATH', help='output file (default: from config, else stdout)')
    sweep.add_argument('--format', choices=table.FORMATS, default='csv')
    sweep.set_defaults(handler=_command_sweep)

    audit = commands.add_parser('audit', help='check analytic bounds against quadrature')
    audit.add_argument('--grid', default='default', metavar='default|PATH', help='audit grid')
    audit.set_defaults(handler=_command_audit)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Runs the command line interface.

    :param argv: arguments without the program name (default: sys.argv[1:])
    :return: exit status
    """
    args = build_parser().parse_args(argv)

    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(level=level, format='%(asctime)s %(levelname)s %(name)s: %(message)s')

    try:
        return args.handler(args)
    except (PolythreshError, ValueError, OSError) as e:
        logger.debug('command failed', exc_info=True)
        print(f'error: {e}', file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())
