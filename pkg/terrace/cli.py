"""Command line interface of terrace

Usage::

    terrace certify --family ln1p@k=1 [--prefix N] [--budget N]
    terrace explore --family sin@k=1 --dims 50,100,200 [--weighted-check]
    terrace table --family cesaro@k=1 --prefix 5

Every command accepts ``--format json|markdown|csv``, ``--out PATH`` and
``--no-timestamp``. The exit code of ``certify`` is the verdict (see
`terrace.exitcodes`); ``explore`` and ``table`` exit with 0. Any error,
including a bad command line, exits with 3.
"""
# terrace/cli.py - the terrace command
#
# Copyright (C) 2026 The terrace developers
#
# terrace is free software: you can redistribute it and/or modify it
# under the terms of the GNU Lesser General Public License as published
# by the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# terrace is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or
# FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public
# License for more details.

import sys
import logging
import argparse
from fractions import Fraction

from terrace import certify, exitcodes, report, seqgen, spectra
from terrace.errors import Error, InterfaceError

_logger = logging.getLogger("terrace.cli")

FORMATS = ('json', 'markdown', 'csv')

"""Width of the a_n enclosures printed by the table command."""
TABLE_WIDTH = Fraction(1, 10 ** 20)


class _Parser(argparse.ArgumentParser):
    """An ArgumentParser exiting with the terrace error code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("%s: error: %s\n" % (self.prog, message))
        sys.exit(exitcodes.ERROR)


def _dimensions(s):
    try:
        dims = [int(d) for d in s.split(',') if d.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("bad dimension list: %r" % s)
    if not dims or min(dims) < 1:
        raise argparse.ArgumentTypeError("dimensions must be positive")
    return dims


def _nonnegative(s):
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError("not an integer: %r" % s)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative: %r" % s)
    return v


class RunConfig(object):
    """The validated configuration of one command run."""

    def __init__(self, command, family, prefix_max=None,
            order_budget=seqgen.DEFAULT_BUDGET, dimensions=(), output=None,
            format=None, timestamp=True, workers=1,
            tolerance=spectra.EIGEN_TOLERANCE, weighted_check=False):
        self.command = command
        self.family = seqgen.parse_family(family)
        if prefix_max is not None and prefix_max < 0:
            raise InterfaceError("prefix must be nonnegative")
        self.prefix_max = prefix_max
        if order_budget < seqgen.DEFAULT_ORDER:
            raise InterfaceError("budget must be at least %d"
                % seqgen.DEFAULT_ORDER)
        self.order_budget = order_budget
        self.dimensions = list(dimensions or ())
        self.output = output
        if format is None:
            format = command == 'table' and 'markdown' or 'json'
        if format not in FORMATS:
            raise InterfaceError("unknown format: %r" % format)
        self.format = format
        self.timestamp = timestamp
        if workers < 1:
            raise InterfaceError("workers must be positive")
        self.workers = workers
        self.tolerance = tolerance
        self.weighted_check = weighted_check

    @classmethod
    def from_args(cls, args):
        return cls(args.command, args.family, prefix_max=args.prefix,
            order_budget=args.budget, dimensions=args.dims,
            output=args.out, format=args.format,
            timestamp=not args.no_timestamp, workers=args.workers,
            tolerance=args.tolerance,
            weighted_check=getattr(args, 'weighted_check', False))


def _emit(cfg, text):
    if cfg.output:
        with open(cfg.output, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_certify(cfg):
    """Run the certification pipeline and return the verdict exit code."""
    prefix = cfg.prefix_max
    if prefix is None:
        prefix = certify.DEFAULT_PREFIX
    rv = certify.certify(cfg.family, prefix_max=prefix,
        budget=cfg.order_budget, workers=cfg.workers)
    doc = rv.as_dict(timing=cfg.timestamp)

    if cfg.format == 'json':
        text = report.dumps(report.envelope('certify', [doc],
            timestamp=cfg.timestamp))
    elif cfg.format == 'markdown':
        text = report.markdown_certify(doc) + '\n'
    else:
        text = report.csv_text(
            ['n', 'lower_check', 'upper_check', 'lower_margin',
                'upper_margin'],
            [[v['n'], v['lower_check'], v['upper_check'],
                    v['lower_margin'] and v['lower_margin']['approx'],
                    v['upper_margin'] and v['upper_margin']['approx']]
                for v in doc['prefix_results']])
    _emit(cfg, text)
    return exitcodes.for_verdict(rv.verdict)


def cmd_explore(cfg):
    """Compute compression spectra for each dimension; always exits 0."""
    if not cfg.dimensions:
        raise InterfaceError("explore needs --dims")
    for N in cfg.dimensions:
        if N > spectra.MAX_DIMENSION:
            raise InterfaceError("dimension %d exceeds %d"
                % (N, spectra.MAX_DIMENSION))
    reports = spectra.explore_open_question(cfg.family, cfg.dimensions,
        tolerance=cfg.tolerance, weighted=cfg.weighted_check)
    docs = [r.as_dict() for r in reports]

    if cfg.format == 'json':
        text = report.dumps(report.envelope('explore', docs,
            timestamp=cfg.timestamp))
    elif cfg.format == 'markdown':
        text = report.markdown_spectra(docs)
    else:
        text = report.csv_text(['N', 'min_eig', 'residual'],
            [r.csv_row() for r in reports])
    _emit(cfg, text)
    return 0


def cmd_table(cfg):
    """Print a_n and both criterion margins for n <= prefix; exits 0."""
    prefix = cfg.prefix_max
    if prefix is None:
        prefix = certify.DEFAULT_PREFIX
    warnings = []
    rows = []
    for n in range(prefix + 1):
        a = seqgen.value_enclosure(cfg.family, n, width=TABLE_WIDTH,
            budget=cfg.order_budget)
        if n == 0 and a.lo > 1:
            warnings.append("a_0 > 1: the hypothesis 0 < a_0 <= 1 fails")
        v = certify.check_criterion_at(cfg.family, n,
            budget=cfg.order_budget)
        row = v.as_dict()
        row['a_n'] = report.interval_dict(a)
        rows.append(row)
    for w in warnings:
        sys.stderr.write("terrace: warning: %s\n" % w)

    doc = {'family': cfg.family.spec, 'rows': rows, 'warnings': warnings}
    if cfg.format == 'json':
        text = report.dumps(report.envelope('table', [doc],
            timestamp=cfg.timestamp))
    elif cfg.format == 'markdown':
        text = report.markdown_table(doc)
    else:
        text = report.csv_text(
            ['n', 'a_n', 'lower_margin', 'lower_check', 'upper_margin',
                'upper_check'],
            [[r['n'], r['a_n']['approx'],
                    r['lower_margin'] and r['lower_margin']['approx'],
                    r['lower_check'],
                    r['upper_margin'] and r['upper_margin']['approx'],
                    r['upper_check']]
                for r in rows])
    _emit(cfg, text)
    return 0


COMMANDS = {
    'certify': cmd_certify,
    'explore': cmd_explore,
    'table': cmd_table,
}


def make_parser():
    common = _Parser(add_help=False)
    common.add_argument("--family", "-f", required=True,
        help="family spec, e.g. ln1p@k=1")
    common.add_argument("--prefix", type=_nonnegative, default=None,
        help="highest index checked pointwise (default: %d)"
            % certify.DEFAULT_PREFIX)
    common.add_argument("--budget", type=int, default=seqgen.DEFAULT_BUDGET,
        help="series order budget (default: %(default)s)")
    common.add_argument("--dims", type=_dimensions, default=None,
        help="comma separated compression sizes, e.g. 50,100,200")
    common.add_argument("--format", choices=FORMATS, default=None,
        help="output format")
    common.add_argument("--out", "-o", default=None,
        help="output file (default: stdout)")
    common.add_argument("--no-timestamp", action="store_true",
        help="omit timestamp and timings, for byte-identical reports")
    common.add_argument("--workers", type=int, default=1,
        help="threads checking prefix indices (default: %(default)s)")
    common.add_argument("--tolerance", type=float,
        default=spectra.EIGEN_TOLERANCE,
        help="relative eigensolver residual (default: %(default)s)")
    common.add_argument("--verbose", "-v", action="count", default=0,
        help="log progress on stderr; repeat for debug output")

    parser = _Parser(prog="terrace",
        description="Certify hyponormality of terraced matrices.")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("certify", parents=[common],
        help="prove or refute hyponormality of a family")

    p = sub.add_parser("explore", parents=[common],
        help="compression spectra as numerical evidence")
    p.add_argument("--weighted-check", action="store_true",
        help="also classify the weighted sequence (n+1) a_n")

    p = sub.add_parser("table", parents=[common],
        help="per index enclosures and criterion margins")
    return parser


def _configure_logging(verbose):
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level,
        format="%(name)s: %(levelname)s: %(message)s")


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        cfg = RunConfig.from_args(args)
        return COMMANDS[cfg.command](cfg)
    except Error as e:
        _logger.debug("command failed", exc_info=True)
        sys.stderr.write("terrace: error: %s\n" % e)
        return exitcodes.ERROR
    except EnvironmentError as e:
        _logger.debug("i/o failed", exc_info=True)
        sys.stderr.write("terrace: error: %s\n" % e)
        return exitcodes.ERROR


if __name__ == '__main__':
    sys.exit(main())
