"""Command-line interface: ``bicliques enumerate | generate | bench``.

Exit codes: 0 success, 1 usage error, 2 bad input, 3 size guard or timeout.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import bench
from .bipartite import enumerate_bipartite_mibs
from .fileio import FormatError, read_graph, read_vertices, write_bicliques, write_graph, write_vertices
from .generator import GenParams, generate, split_balance
from .lexmib import dias_uncorrected, lexmib
from .mcb import mcb
from .oct import decomposition_from_oct, greedy_oct, two_color
from .octmib import octmib
from .oracle import OracleSizeError, all_mibs

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3
ALGORITHMS = ("octmib", "lexmib", "dias-uncorrected", "mcb", "bipartite", "oracle")


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bicliques", description="Maximal induced biclique enumeration.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    enum = sub.add_parser("enumerate", help="list the MIBs of a graph file")
    enum.add_argument("graph", help="edge-list file ('n m' header, then 'u v' lines)")
    enum.add_argument("-a", "--algorithm", choices=ALGORITHMS, default="octmib")
    oct_group = enum.add_mutually_exclusive_group()
    oct_group.add_argument("--oct", metavar="FILE", help="OCT vertex list (octmib)")
    oct_group.add_argument("--oct-heuristic", action="store_true",
                           help="compute the OCT set greedily (octmib default)")
    enum.add_argument("--independent-set", metavar="FILE", help="designated set X (mcb)")
    enum.add_argument("--no-prune", action="store_true",
                      help="octmib/mcb: disable next-pruning and duplicate tables")
    out = enum.add_mutually_exclusive_group()
    out.add_argument("--count", action="store_true", help="print only the number of MIBs")
    out.add_argument("--stats", action="store_true", help="print a JSON summary")

    gen = sub.add_parser("generate", help="write a random near-bipartite graph and its OCT set")
    gen.add_argument("--nl", type=int, help="|L|")
    gen.add_argument("--nr", type=int, help="|R|")
    gen.add_argument("--nb", type=int, help="|L|+|R| (with --balance, instead of --nl/--nr)")
    gen.add_argument("--balance", default="1:1", help="n_L:n_R ratio used with --nb")
    gen.add_argument("--no", type=int, default=0, help="|O|")
    gen.add_argument("--dlr", type=float, default=0.05, help="expected L-R density")
    gen.add_argument("--dob", type=float, help="expected O-(L∪R) density (default: --dlr)")
    gen.add_argument("--doo", type=float, help="expected density inside O (default: --dlr)")
    gen.add_argument("--cv", type=float, default=0.5, help="degree cv of the smaller L/R side")
    gen.add_argument("--cv-ob", type=float, default=0.5, help="degree cv of O over L∪R")
    gen.add_argument("--oct-mode", default="random",
                     choices=("random", "independent", "perfect-matching"))
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--prune-isolates", action="store_true")
    gen.add_argument("-o", "--out", required=True, metavar="PREFIX",
                     help="writes PREFIX.graph and PREFIX.oct")

    bn = sub.add_parser("bench", help="time enumerators over a generated corpus (CSV)")
    bn.add_argument("--corpus", metavar="FILE", help="JSON corpus description")
    bn.add_argument("--sweep", metavar="AXIS=V1,V2,...",
                    help=f"sweep one axis of the base parameters; axes: {', '.join(bench.SWEEP_AXES)}")
    bn.add_argument("--nb", type=int, default=200)
    bn.add_argument("--balance", default="1:10")
    bn.add_argument("--no", type=int, default=0)
    bn.add_argument("--density", type=float, default=0.05, help="d_lr = d_ob = d_oo")
    bn.add_argument("--cv", type=float, default=0.5)
    bn.add_argument("--cv-ob", type=float, default=0.5)
    bn.add_argument("--oct-mode", default="random",
                    choices=("random", "independent", "perfect-matching"))
    bn.add_argument("--seeds", type=int, default=5, help="seeds 0..N-1")
    bn.add_argument("--algorithms", default="octmib,lexmib")
    bn.add_argument("--timeout", type=float, default=None, help="seconds per row")
    bn.add_argument("--jobs", type=int, default=1)
    bn.add_argument("--out", metavar="FILE", help="CSV destination (default stdout)")
    return parser


def _decomposition(args, g):
    if args.oct:
        try:
            return decomposition_from_oct(g, read_vertices(args.oct))
        except (OSError, ValueError) as exc:
            raise InputError(f"bad OCT file: {exc}") from None
    return greedy_oct(g)


def _run_enumerate(args) -> int:
    try:
        g = read_graph(args.graph)
    except (OSError, FormatError) as exc:
        raise InputError(f"cannot read graph: {exc}") from None
    prune = not args.no_prune
    n_o = 0
    if args.algorithm == "mcb":
        if not args.independent_set:
            raise UsageError("mcb needs --independent-set FILE")
        try:
            x = read_vertices(args.independent_set)
        except (OSError, FormatError) as exc:
            raise InputError(f"bad independent-set file: {exc}") from None
        if any(not 0 <= v < g.n for v in x) or not _independent(g, x):
            raise InputError("--independent-set must list an independent set of the graph")
    start = time.perf_counter()
    if args.algorithm == "octmib":
        d = _decomposition(args, g)
        n_o = d.n_o
        stream = octmib(g, d, prune=prune)
    elif args.algorithm == "lexmib":
        stream = lexmib(g)
    elif args.algorithm == "dias-uncorrected":
        stream = dias_uncorrected(g)
    elif args.algorithm == "mcb":
        stream = mcb(g, x, prune=prune)
    elif args.algorithm == "bipartite":
        coloring = two_color(g, range(g.n))
        if coloring is None:
            raise InputError("graph is not bipartite")
        from .graph import members

        stream = enumerate_bipartite_mibs(g, members(coloring[0]), members(coloring[1]))
    else:
        try:
            result = all_mibs(g)
        except OracleSizeError as exc:
            print(f"bicliques: {exc}", file=sys.stderr)
            return EXIT_GUARD
        stream = iter(sorted(result, key=lambda b: b.vertices))

    if args.count or args.stats:
        count = sum(1 for _ in stream)
        wall_ms = (time.perf_counter() - start) * 1000.0
        if args.count:
            print(count)
        else:
            print(json.dumps({
                "algorithm": args.algorithm,
                "n": g.n,
                "m": g.m,
                "n_o": n_o,
                "mib_count": count,
                "wall_ms": round(wall_ms, 3),
                "per_mib_us": round(wall_ms * 1000.0 / count, 3) if count else None,
            }))
    else:
        write_bicliques(stream, sys.stdout)
    return EXIT_OK


def _independent(g, vertices) -> bool:
    from .graph import mask_of

    return g.is_independent_mask(mask_of(vertices))


def _run_generate(args) -> int:
    if args.nb is not None:
        if args.nl is not None or args.nr is not None:
            raise UsageError("use either --nb/--balance or --nl/--nr")
        try:
            n_l, n_r = split_balance(args.nb, args.balance)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        if args.nl is None or args.nr is None:
            raise UsageError("give --nl and --nr (or --nb with --balance)")
        n_l, n_r = args.nl, args.nr
    params = GenParams(
        n_l=n_l, n_r=n_r, n_o=args.no,
        d_lr=args.dlr,
        d_ob=args.dlr if args.dob is None else args.dob,
        d_oo=args.dlr if args.doo is None else args.doo,
        cv_lr=args.cv, cv_ob=args.cv_ob,
        oct_mode=args.oct_mode.replace("-", "_"),
        seed=args.seed,
        prune_isolates=args.prune_isolates,
    )
    try:
        g, d = generate(params)
    except ValueError as exc:
        raise InputError(f"bad generator parameters: {exc}") from None
    write_graph(g, f"{args.out}.graph")
    write_vertices(d.o, f"{args.out}.oct")
    return EXIT_OK


def _run_bench(args) -> int:
    algorithms = [a for a in args.algorithms.split(",") if a]
    timeout = args.timeout
    try:
        if args.corpus:
            params, algorithms, corpus_timeout = bench.load_corpus_file(args.corpus)
            timeout = timeout if timeout is not None else corpus_timeout
        else:
            n_l, n_r = split_balance(args.nb, args.balance)
            base = GenParams(
                n_l=n_l, n_r=n_r, n_o=args.no,
                d_lr=args.density, d_ob=args.density, d_oo=args.density,
                cv_lr=args.cv, cv_ob=args.cv_ob,
                oct_mode=args.oct_mode.replace("-", "_"),
            )
            bases = [base]
            if args.sweep:
                axis, _, values = args.sweep.partition("=")
                if not values:
                    raise UsageError("--sweep expects AXIS=V1,V2,...")
                bases = bench.sweep(base, axis, values.split(","))
            params = bench.expand_seeds(bases, range(args.seeds))
            for p in params:
                p.validate()
    except (OSError, json.JSONDecodeError, TypeError) as exc:
        raise InputError(f"bad corpus: {exc}") from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    for a in algorithms:
        if a not in bench.ALGORITHMS:
            raise UsageError(f"unknown algorithm {a!r}; choose from {', '.join(bench.ALGORITHMS)}")
    rows = bench.run_corpus(params, algorithms, timeout=timeout, jobs=args.jobs)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            bench.write_csv(rows, fh)
    else:
        bench.write_csv(rows, sys.stdout)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help, or a usage error reported by _Parser
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    handler = {"enumerate": _run_enumerate, "generate": _run_generate, "bench": _run_bench}[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        print(f"bicliques: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"bicliques: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
