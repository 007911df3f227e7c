"""Command-line entry point.

Exit codes: 0 success, 1 usage or input errors, 2 infeasible or invalid
result, 3 search budget exhausted.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
import time

from . import approx, generators
from .bounds import ParameterError, best_lower_bound
from .cover import Cover, InvalidCoverError, cover_cost, validate_cover
from .exact import BudgetExhaustedError, InfeasibleError, SearchLimits, exact_dual, exact_opt
from .graph import GraphError, is_tree
from .hypergraph import CapViolationError, HypergraphError, validate_hypercover
from .io import (
    ParseError,
    RunReport,
    bounds_document,
    dump,
    emit_report,
    format_graph,
    parse_cover,
    parse_graph,
    parse_hypercover,
    parse_hypergraph,
    parse_three_partition,
)
from .reductions import InvalidInstanceError, reduce_3partition

log = logging.getLogger("indcover")

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_BUDGET = 0, 1, 2, 3

ALGORITHMS = ("exact", "caterpillar", "bounded-degree", "degenerate", "separator", "clique")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_seed() -> int:
    raw = os.environ.get("INDCOVER_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"INDCOVER_SEED must be an integer, got {raw!r}") from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _limits(args) -> SearchLimits:
    return SearchLimits(max_nodes=args.max_nodes, time_budget=args.time_budget)


def _solve_cover(args, g):
    alg = args.alg
    if alg == "exact":
        return exact_opt(g, args.k, _limits(args)).cover
    if alg == "caterpillar":
        return approx.cover_caterpillar(g, args.k)
    if alg == "bounded-degree":
        return approx.cover_bounded_degree(g, args.k)
    if alg == "degenerate":
        return approx.cover_degenerate(g, args.k)
    if alg == "separator":
        name = args.provider or ("centroid" if is_tree(g) else "bfs-level")
        return approx.cover_separator(g, args.k, approx.PROVIDERS[name])
    if g.m != g.n * (g.n - 1) // 2:
        raise UsageError("the clique construction needs a complete graph")
    return Cover(approx.cover_clique(g.n, args.k).subsets, g)


def cmd_solve(args) -> int:
    g = parse_graph(_read(args.file))
    start = time.perf_counter()
    cover = _solve_cover(args, g)
    elapsed = time.perf_counter() - start
    bounds = best_lower_bound(g, args.k, seed=args.seed)
    valid = not validate_cover(g, cover)
    log.info("%s finished in %.3fs", args.alg, elapsed)
    sys.stdout.write(emit_report(RunReport.from_cover(args.alg, cover, bounds, valid, args.seed, elapsed)))
    return EXIT_OK if valid else EXIT_INFEASIBLE


def cmd_bounds(args) -> int:
    g = parse_graph(_read(args.file))
    b = best_lower_bound(g, args.k, seed=args.seed)
    doc = {
        "k": args.k,
        "bounds": bounds_document(b),
        "neighborhood_exact": b.neighborhood_exact,
        "witnesses": {
            "kappa": b.witnesses["kappa"],
            "density_m": b.witnesses["density_m"],
            "neighborhood_set": [v + 1 for v in b.witnesses["neighborhood_set"]],
        },
        "seed": args.seed,
    }
    sys.stdout.write(dump(doc))
    return EXIT_OK


def cmd_dual(args) -> int:
    g = parse_graph(_read(args.file))
    try:
        p, cover = exact_dual(g, args.m, _limits(args))
    except InfeasibleError as exc:
        _fail(exc, EXIT_INFEASIBLE)
        sys.stdout.write(dump({"m": args.m, "feasible": False}))
        return EXIT_INFEASIBLE
    doc = {
        "m": args.m,
        "feasible": True,
        "p": p,
        "cost": cover_cost(cover),
        "subsets": [[v + 1 for v in s] for s in cover.sorted_subsets()],
        "valid": not validate_cover(g, cover),
    }
    sys.stdout.write(dump(doc))
    return EXIT_OK


def cmd_check(args) -> int:
    g = parse_graph(_read(args.file))
    cover = parse_cover(_read(args.cover), g)
    if cover.k != args.k:
        raise UsageError(f"cover file holds {cover.k} subsets but -k is {args.k}")
    violations = validate_cover(g, cover)
    doc = {
        "k": args.k,
        "cost": cover_cost(cover),
        "valid": not violations,
        "violations": [[u + 1, v + 1] for u, v in violations],
    }
    sys.stdout.write(dump(doc))
    return EXIT_OK if not violations else EXIT_INFEASIBLE


def cmd_check_hyper(args) -> int:
    h = parse_hypergraph(_read(args.file))
    cover = parse_hypercover(_read(args.cover), h, args.cap)
    try:
        uncovered = validate_hypercover(h, cover)
    except CapViolationError as exc:
        sys.stdout.write(dump({"valid": False, "cap_violations": [i + 1 for i in exc.offenders]}))
        return EXIT_INFEASIBLE
    doc = {
        "p": len(cover.subsets),
        "cost": max((len(s) for s in cover.subsets), default=0),
        "valid": not uncovered,
        "uncovered": [sorted(v + 1 for v in e) for e in uncovered],
    }
    sys.stdout.write(dump(doc))
    return EXIT_OK if not uncovered else EXIT_INFEASIBLE


def cmd_reduce(args) -> int:
    inst = parse_three_partition(_read(args.three_partition))
    g, k, target = reduce_3partition(inst)
    sys.stdout.write(format_graph(g, comments=[f"k {k}", f"target {target}"]))
    return EXIT_OK


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "path":
        g = generators.gen_path(args.n)
    elif kind == "caterpillar":
        g = generators.gen_caterpillar(len(args.leaves), args.leaves)
    elif kind == "forest":
        g = generators.gen_forest_of_paths(args.lengths)
    elif kind == "clique":
        g = generators.gen_clique(args.n)
    elif kind == "ternary":
        g = generators.gen_ternary_tree(args.h)
    else:
        g = generators.gen_random_degenerate(args.n, args.c, args.seed, connected=args.connected)
    sys.stdout.write(format_graph(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="indcover", description="Cover a graph with k induced subgraphs of small order.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to standard error")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def limits(p):
        p.add_argument("--max-nodes", type=int, default=SearchLimits.max_nodes)
        p.add_argument("--time-budget", type=float, default=SearchLimits.time_budget, help="seconds")

    p = sub.add_parser("solve", help="build a cover with one of the algorithms")
    p.add_argument("--alg", choices=ALGORITHMS, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--provider", choices=sorted(approx.PROVIDERS), default=None,
                   help="separator provider (default: centroid on trees, bfs-level otherwise)")
    limits(p)
    p.add_argument("file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bounds", help="report the lower bounds")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("file")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("dual", help="fewest subsets of order at most m")
    p.add_argument("-m", type=int, required=True)
    limits(p)
    p.add_argument("file")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("check", help="validate a cover file against a graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--cover", required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("check-hyper", help="validate a cover file against a hypergraph")
    p.add_argument("--cover", required=True)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("file")
    p.set_defaults(func=cmd_check_hyper)

    p = sub.add_parser("reduce", help="3-Partition instance to a forest of paths")
    p.add_argument("--three-partition", required=True, metavar="TPFILE")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="emit a generated graph")
    kinds = p.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    kinds.add_parser("path").add_argument("n", type=int)
    kinds.add_parser("caterpillar").add_argument("leaves", type=int, nargs="+",
                                                 help="leaf count per spine vertex")
    kinds.add_parser("forest").add_argument("lengths", type=int, nargs="+")
    kinds.add_parser("clique").add_argument("n", type=int)
    kinds.add_parser("ternary").add_argument("h", type=int)
    q = kinds.add_parser("degenerate")
    q.add_argument("n", type=int)
    q.add_argument("c", type=int)
    q.add_argument("--seed", type=int, default=None)
    q.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        if getattr(args, "seed", 0) is None:
            args.seed = _default_seed()
        return args.func(args)
    except BudgetExhaustedError as exc:
        return _fail(exc, EXIT_BUDGET)
    except InfeasibleError as exc:
        return _fail(exc, EXIT_INFEASIBLE)
    except (UsageError, ParseError, GraphError, ParameterError, InvalidCoverError,
            InvalidInstanceError, HypergraphError) as exc:
        return _fail(exc, EXIT_USAGE)


def _fail(exc: Exception, code: int) -> int:
    sys.stderr.write(f"indcover: error: {exc}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
