import argparse
import sys
from typing import List, Optional

import pandas as pd
from EdgeIdealSolvers.configuration import DEFAULT_SEED, default_num_processes
from EdgeIdealSolvers.graph_io.corpus import iter_corpus, parse_corpus_spec, parse_graph_argument
from EdgeIdealSolvers.graphs.graph import Graph
from EdgeIdealSolvers.graphs.invariants import classify
from EdgeIdealSolvers.homology.field_rank import FieldSpec
from EdgeIdealSolvers.ideals.powers import edge_ideal, sqf_power, sqf_symbolic
from EdgeIdealSolvers.ideals.sqf_ideal import SqfIdeal, generator_degrees
from EdgeIdealSolvers.regularity.betti_table import betti_table
from EdgeIdealSolvers.utilities.exceptions import CapabilityError, DomainError, GraphParseError, ParameterError
from EdgeIdealSolvers.verification.checks import CHECKS
from EdgeIdealSolvers.verification.suite import explore_conjecture, report_to_frame, run_suite, save_report

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPABILITY = 3

IDEAL_KINDS = ('edge', 'sqf-power', 'sqf-symbolic')


def parse_ideal_literal(text: str) -> SqfIdeal:
    """ideal:<n>:<gen>;<gen>;... with each generator a comma separated list of variable indices."""
    _, n_text, gens_text = (text.split(':', 2) + ['', ''])[:3]
    try:
        n = int(n_text)
        supports = [[int(v) for v in g.split(',') if v.strip()] for g in gens_text.split(';') if g.strip()]
    except ValueError:
        raise ParameterError(f"Cannot parse ideal literal '{text}', expected e.g. ideal:5:0,1,2,3,4") from None
    return SqfIdeal.from_supports(n, supports)


def ideal_of_kind(g: Graph, kind: str, s: Optional[int]) -> SqfIdeal:
    if kind == 'edge':
        if s is not None:
            raise ParameterError(f"-s {s} has no meaning for --kind edge, use --kind sqf-power or sqf-symbolic")
        return edge_ideal(g)
    if s is None:
        raise ParameterError(f"--kind {kind} needs -s")
    if kind == 'sqf-power':
        return sqf_power(g, s)
    return sqf_symbolic(edge_ideal(g), s)


def cmd_invariants(args) -> int:
    g = parse_graph_argument(args.graph)
    inv = classify(g)
    print(pd.Series(inv.to_dict()).to_string())
    return EXIT_OK


def cmd_ideal(args) -> int:
    g = parse_graph_argument(args.graph)
    J = ideal_of_kind(g, args.kind, args.s)
    if J.is_zero:
        print("0")
        return EXIT_OK
    for m in J.gens:
        print(m)
    stats = generator_degrees(J)
    print(f"# {len(J.masks)} generator(s), degrees {stats.min_degree}..{stats.max_degree}, "
          f"counts {dict(sorted(stats.degrees.items()))}")
    return EXIT_OK


def cmd_betti(args) -> int:
    field = FieldSpec.parse(args.field)
    if args.target.startswith('ideal:'):
        if args.kind != 'edge' or args.s is not None:
            raise ParameterError("--kind and -s apply to graphs, not to an ideal literal")
        J = parse_ideal_literal(args.target)
    else:
        J = ideal_of_kind(parse_graph_argument(args.target), args.kind, args.s)
    table = betti_table(J, field, num_processes=args.jobs)
    print(f"ideal: {J}")
    print(f"Betti table of S/J over {field}:")
    print(table.to_frame().to_string())
    print(f"regularity {table.reg_ideal}")
    return EXIT_OK


def cmd_verify(args) -> int:
    check_ids = list(CHECKS) if args.checks == 'all' else [c.strip() for c in args.checks.split(',') if c.strip()]
    spec = parse_corpus_spec(args.corpus, args.filter)
    report = run_suite(iter_corpus(spec), check_ids, num_processes=args.jobs, seed=args.seed,
                       field=FieldSpec.parse(args.field), corpus_name=str(spec), log_file=args.log,
                       verbose=args.verbose)
    save_report(report, args.out)
    print(report_to_frame(report).to_string())
    print(f"{report.num_failures} failure(s), {report.wall_ms} ms, report written to {args.out}")
    return EXIT_CHECK_FAILED if report.num_failures else EXIT_OK


def cmd_explore(args) -> int:
    spec = parse_corpus_spec(args.corpus if args.corpus else f"enumerate:{args.max_n}", args.filter)
    s_range = None
    if args.s_min is not None or args.s_max is not None:
        s_range = (args.s_min if args.s_min is not None else 1, args.s_max if args.s_max is not None else 63)
    report = explore_conjecture(iter_corpus(spec), s_range, kind=args.kind, num_processes=args.jobs,
                                seed=args.seed, corpus_name=str(spec), log_file=args.log, verbose=args.verbose)
    save_report(report, args.out)
    exploration = report.exploration
    print(f"{len(exploration['tight'])} tight instance(s), {len(exploration['violations'])} violation(s)")
    for v in exploration['violations']:
        print(f"VIOLATION {v['graph_id']} s={v['params']['s']}: reg {v['lhs']} > {v['rhs']}")
    # exploring reports findings, it never fails
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='edge-ideal-solvers',
                                     description='Squarefree symbolic and ordinary powers of edge ideals: Betti '
                                                 'numbers, regularity and corpus verification of regularity bounds.')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('invariants', help='matching numbers, height and graph class predicates')
    p.add_argument('graph', help='g6:<record>, a named family (path:4, startri:2, kbip:3,5, cycle:5) or a file')
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser('ideal', help='minimal generators of I(G), I(G)^[s] or I(G)^{s}')
    p.add_argument('graph')
    p.add_argument('--kind', choices=IDEAL_KINDS, default='edge')
    p.add_argument('-s', type=int, default=None)
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser('betti', help='Betti table and regularity')
    p.add_argument('target', help='a graph (see invariants) or an ideal literal ideal:<n>:<gen>;<gen> with '
                                  'comma separated variable indices per generator')
    p.add_argument('--kind', choices=IDEAL_KINDS, default='edge')
    p.add_argument('-s', type=int, default=None)
    p.add_argument('--field', default='Q', help='Q or a prime p')
    p.add_argument('--jobs', type=int, default=1, help='processes for the Hochster subset scan')
    p.set_defaults(func=cmd_betti)

    for name, func in (('verify', cmd_verify), ('explore', cmd_explore)):
        p = sub.add_parser(name)
        if name == 'verify':
            p.add_argument('--checks', required=True, help=f"'all' or a comma separated list of {', '.join(CHECKS)}")
            p.add_argument('--corpus', required=True, help='enumerate:N, g6file:<path>, edges:<path> or '
                                                           'named:<family>:<params>')
            p.add_argument('--field', default='Q')
        else:
            p.add_argument('--max-n', type=int, default=6, help='exhaustive corpus of all graphs on <= N vertices')
            p.add_argument('--corpus', default=None, help='overrides --max-n')
            p.add_argument('--kind', choices=('sqf-symbolic', 'sqf-power'), default='sqf-symbolic')
            p.add_argument('--s-min', type=int, default=None)
            p.add_argument('--s-max', type=int, default=None)
        p.add_argument('--filter', default=None, help='comma separated: connected, chordal, bipartite, '
                                                      'cameron_walker, height>=k')
        p.add_argument('--jobs', type=int, default=default_num_processes)
        p.add_argument('--seed', type=int, default=DEFAULT_SEED)
        p.add_argument('--out', required=True)
        p.add_argument('--log', default=None, help='append timestamped progress lines to this file')
        p.add_argument('--verbose', action='store_true')
        p.set_defaults(func=func)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except CapabilityError as e:
        print(f"capability error: {e}", file=sys.stderr)
        return EXIT_CAPABILITY
    except (ParameterError, GraphParseError, DomainError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
