"""
Command Line
Subcommands for spectra, spanning k-trees, extremal graphs and campaigns
"""
import argparse
import json
import logging
import sys
from typing import List, Optional, TextIO

from ..extremal.families import (
    gprime, gsharp, gstar, gstar_wiener_closed, gtilde, rho_sharp_closed,
)
from ..extremal.polynomials import PolyId, PolyTag, largest_root
from ..graphs.graph_core import Graph, GraphError
from ..harness.campaigns import Mode, create_harness
from ..harness.report import VerificationReport
from ..harness.settings import HarnessSettings
from ..interchange.edge_list import parse_edge_list
from ..interchange.graph6 import parse_graph6, write_graph6
from ..interchange.report_io import report_to_csv, report_to_json
from ..ktree.spanning_ktree import has_spanning_ktree
from ..spectra.distance_spectra import (
    ConvergenceError, all_pairs_distances, full_spectrum, lambda1, wiener, wiener_bound,
)


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ANOMALIES = 1
EXIT_USAGE = 2

DEFAULTS = HarnessSettings()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='distance_ktree',
        description='Distance spectral radius and spanning k-tree verification toolkit',
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('--verbose', action='store_true', help='Log at DEBUG level')
    verbosity.add_argument('--quiet', action='store_true', help='Log warnings only')
    commands = parser.add_subparsers(dest='command', required=True)

    def graph_input(sub):
        source = sub.add_mutually_exclusive_group(required=True)
        source.add_argument('--g6', help='Graph as a graph6 line')
        source.add_argument('--edges', help='Path to an edge-list file')

    spectra = commands.add_parser('spectra', help='λ1, Wiener index and full distance spectrum')
    graph_input(spectra)

    ktree = commands.add_parser('ktree', help='Decide whether a spanning k-tree exists')
    graph_input(ktree)
    ktree.add_argument('--k', type=int, required=True, help='Degree bound')

    extremal = commands.add_parser('extremal', help='Build an extremal graph')
    extremal.add_argument('family', choices=['gstar', 'gsharp', 'gtilde', 'gprime'])
    extremal.add_argument('--n', type=int, required=True, help='Order')
    extremal.add_argument('--k', type=int, help='Degree bound (gstar, gtilde)')
    extremal.add_argument('--s', type=int, help='Join clique size (gtilde, gprime)')
    extremal.add_argument('--t', type=int, help='Components after removing the clique (gprime)')

    verify = commands.add_parser('verify', help='Spanning k-tree bound campaign')
    verify.add_argument('--k', type=int, required=True)
    verify.add_argument('--n', type=int, required=True)
    verify.add_argument('--mode', choices=[mode.value for mode in Mode], default=Mode.EXHAUSTIVE.value)
    verify.add_argument('--budget', type=int, default=0, help='Random graphs in sample mode')
    verify.add_argument('--seed', type=int, default=0)
    verify.add_argument('--workers', type=int, help='Worker processes (default: 1)')
    verify.add_argument('--margin', type=float, help=f'Threshold margin (default: {DEFAULTS.margin})')

    sweep = commands.add_parser('sweep', help='Extremal radius orderings and polynomial signs')
    sweep.add_argument('--kmax', type=int, default=DEFAULTS.poly_k_max)
    sweep.add_argument('--smax', type=int, default=DEFAULTS.poly_s_max)
    sweep.add_argument('--nmax', type=int, default=DEFAULTS.line_n_max)

    lemmas = commands.add_parser('lemmas', help='Seeded lemma property suite')
    lemmas.add_argument('--trials', type=int, default=200)
    lemmas.add_argument('--seed', type=int, default=0)

    for sub in (verify, sweep, lemmas):
        sub.add_argument('--csv', action='store_true', help='Emit records as CSV instead of JSON')
    return parser


def _load_graph(args) -> Graph:
    if args.g6 is not None:
        return parse_graph6(args.g6)
    with open(args.edges, encoding='utf-8') as handle:
        return parse_edge_list(handle.read())


def _emit(stdout: TextIO, document) -> None:
    stdout.write(json.dumps(document, ensure_ascii=False, indent=2, allow_nan=False))
    stdout.write('\n')


# ============================================================================
# SUBCOMMANDS
# ============================================================================

def _spectra(args, stdout: TextIO) -> int:
    g = _load_graph(args)
    d = all_pairs_distances(g)
    result = lambda1(d)
    _emit(stdout, {
        'graph6': write_graph6(g),
        'n': g.order,
        'lambda1': result.lambda1,
        'iterations': result.iterations,
        'wiener': wiener(d),
        'wiener_bound': wiener_bound(d),
        'spectrum': full_spectrum(d),
    })
    return EXIT_OK


def _ktree(args, stdout: TextIO) -> int:
    g = _load_graph(args)
    verdict = has_spanning_ktree(g, args.k)
    _emit(stdout, {
        'graph6': write_graph6(g),
        'k': args.k,
        'outcome': verdict.outcome.value,
        'tree_edges': [list(edge) for edge in verdict.tree_edges],
        'win_violation': sorted(verdict.win_violation) if verdict.win_violation is not None else None,
        'nodes_explored': verdict.nodes_explored,
    })
    return EXIT_OK


def _extremal(args, stdout: TextIO) -> int:
    def need(*names):
        missing = [f"--{name}" for name in names if getattr(args, name) is None]
        if missing:
            raise GraphError(f"{args.family} needs {', '.join(missing)}")

    closed = {}
    if args.family == 'gstar':
        need('k')
        g = gstar(args.n, args.k)
        closed['wiener_closed'] = gstar_wiener_closed(args.n, args.k)
        closed['lambda1_closed'] = largest_root(PolyId(PolyTag.G, n=args.n, k=args.k))
    elif args.family == 'gsharp':
        g = gsharp(args.n)
        closed['lambda1_closed'] = rho_sharp_closed(args.n)
    elif args.family == 'gtilde':
        need('k', 's')
        g = gtilde(args.n, args.k, args.s)
        if args.n >= (args.k - 1) * args.s + 3:
            closed['lambda1_closed'] = largest_root(PolyId(PolyTag.F, n=args.n, k=args.k, s=args.s))
    else:
        need('s', 't')
        g = gprime(args.n, args.s, args.t)

    d = all_pairs_distances(g)
    _emit(stdout, {
        'family': args.family,
        'graph6': write_graph6(g),
        'n': g.order,
        'wiener': wiener(d),
        'lambda1': lambda1(d).lambda1,
        **closed,
    })
    return EXIT_OK


def _campaign(args, stdout: TextIO) -> int:
    harness = create_harness(workers=getattr(args, 'workers', None), margin=getattr(args, 'margin', None))
    if args.command == 'verify':
        report = harness.verify_spanning_ktree_bound(args.k, args.n, args.mode, args.budget, args.seed)
    elif args.command == 'sweep':
        report = harness.sweep_claims(args.kmax, args.smax, args.nmax)
    else:
        report = harness.lemma_property_suite(args.trials, args.seed)
    _write_report(report, stdout, args.csv)
    return EXIT_ANOMALIES if report.has_anomalies else EXIT_OK


def _write_report(report: VerificationReport, stdout: TextIO, as_csv: bool) -> None:
    if as_csv:
        stdout.write(report_to_csv(report))
    else:
        stdout.write(report_to_json(report))
        stdout.write('\n')


_HANDLERS = {
    'spectra': _spectra,
    'ktree': _ktree,
    'extremal': _extremal,
    'verify': _campaign,
    'sweep': _campaign,
    'lemmas': _campaign,
}


def run_cli(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """
    Parse arguments and run one subcommand

    Args:
        argv: Arguments without the program name (sys.argv[1:] when omitted)
        stdout: Output stream (sys.stdout when omitted)

    Returns:
        0 on success, 1 when a campaign reports anomalies, 2 on usage,
        parse or parameter errors
    """
    if stdout is None:
        stdout = sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')
    logging.getLogger().setLevel(level)

    logger.debug(f"Running {args.command} with {vars(args)}")
    try:
        return _HANDLERS[args.command](args, stdout)
    except (ValueError, OSError, ConvergenceError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
