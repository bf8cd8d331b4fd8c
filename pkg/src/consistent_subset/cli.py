"""Command-line front end (``mcs``)."""

from __future__ import annotations

import argparse
import csv
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import io
from .errors import MCSError
from .exact import DEFAULT_SIZE_CAP, mcs_brute_force
from .generators import random_tree
from .graph import ColoredGraph, as_subset, intervals_to_graph, is_consistent
from .reductions import (
    assignment_to_subset,
    count_satisfied,
    cover_to_subset,
    max2sat_to_tree,
    n_of_k,
    vertex_cover_to_intervals,
)
from .result import SolveResult
from .tree_dp import TreeDP, color_cap_from_env, root_tree

log = logging.getLogger("consistent_subset")

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_USAGE = 2


def choose_algorithm(g: ColoredGraph, requested: str, color_cap: int) -> str:
    if requested != "auto":
        return requested
    return "tree-dp" if g.is_tree() and g.color_count <= color_cap else "brute"


def run_solver(
    g: ColoredGraph,
    algorithm: str,
    *,
    root: int = 0,
    color_cap: int | None = None,
    size_cap: int = DEFAULT_SIZE_CAP,
    budget: int | None = None,
) -> SolveResult:
    cap = color_cap_from_env() if color_cap is None else color_cap
    algorithm = choose_algorithm(g, algorithm, cap)
    if algorithm == "tree-dp":
        return TreeDP(root_tree(g, root), cap).solve()
    if algorithm == "brute":
        return mcs_brute_force(g, budget, size_cap=size_cap)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def _deterministic(result: SolveResult) -> dict:
    doc = result.to_json()
    doc["stats"] = {k: v for k, v in doc["stats"].items() if k != "elapsed"}
    return doc


def _emit(path, doc) -> None:
    if path in (None, "-"):
        sys.stdout.write(io.dumps(doc))
    else:
        io.write_json(path, doc)


def _parse_bools(text: str) -> list[bool]:
    table = {"1": True, "t": True, "true": True, "0": False, "f": False, "false": False}
    vals = [table.get(tok.strip().lower()) for tok in text.split(",")]
    if None in vals:
        raise argparse.ArgumentTypeError(f"bad assignment {text!r}")
    return vals


def cmd_solve(args) -> int:
    g = io.parse_instance(args.input)
    result = run_solver(
        g,
        args.algorithm,
        root=args.root,
        size_cap=args.size_cap,
        budget=args.budget,
    )
    log.info("solved with %s in %.3fs", result.algorithm, result.stats.get("elapsed", 0.0))
    _emit(args.output, _deterministic(result))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = io.parse_instance(args.input)
    s = as_subset(g, io.parse_subset(args.subset))
    verdict = is_consistent(g, s)
    if verdict:
        print("consistent")
        return EXIT_OK
    print(f"inconsistent: vertex {verdict.violator}")
    return EXIT_INCONSISTENT


def cmd_reduce_max2sat(args) -> int:
    f = io.parse_dimacs_2cnf(args.input)
    art = max2sat_to_tree(f, args.M)
    if art.desk_scale:
        log.info("desk-scale instance (n=%d, m=%d below the hardness thresholds)", f.num_vars, f.m)
    io.write_json(args.output, art.tree.to_json())
    if args.roles:
        io.write_json(args.roles, art.roles_json())
    if args.assignment is not None:
        a = _parse_bools(args.assignment)
        s = assignment_to_subset(art, a)
        k = count_satisfied(f, a)
        _emit(args.subset_out, {"subset": list(s)})
        log.info("k=%d satisfied clauses, |subset|=%d=N(k)=%d", k, len(s), n_of_k(f.num_vars, f.m, art.M, k))
    return EXIT_OK


def cmd_reduce_vertex_cover(args) -> int:
    art = vertex_cover_to_intervals(io.parse_edge_list(args.input), args.p2, args.p3)
    g = intervals_to_graph(art.family)
    io.write_json(args.output, g.to_json())
    if args.intervals:
        io.write_json(args.intervals, art.family.to_json())
    if args.roles:
        io.write_json(args.roles, art.roles_json())
    if args.cover is not None:
        cover = [int(x) for x in args.cover.split(",") if x.strip()]
        _emit(args.subset_out, {"subset": list(cover_to_subset(art, cover))})
    return EXIT_OK


def cmd_gen_random_tree(args) -> int:
    g = random_tree(args.n, args.colors, args.seed)
    _emit(args.output, g.to_json())
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(io.to_dot(g))
    return EXIT_OK


def _bench_one(job):
    n, c, seed, algorithm, size_cap = job
    g = random_tree(n, c, seed)
    start = time.perf_counter()
    result = run_solver(g, algorithm, size_cap=size_cap)
    millis = (time.perf_counter() - start) * 1000.0
    return {
        "n": n,
        "c": c,
        "algorithm": result.algorithm,
        "millis": f"{millis:.3f}",
        "dp_evaluations": result.stats.get("dp_evaluations", ""),
    }


def cmd_bench(args) -> int:
    jobs = [
        (n, c, args.seed + t, alg, args.size_cap)
        for n in args.sizes
        for c in args.colors
        for t in range(args.trials)
        for alg in args.algorithms
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_bench_one, jobs))
    else:
        rows = [_bench_one(j) for j in jobs]
    out = sys.stdout if args.output in (None, "-") else open(args.output, "w", newline="")
    try:
        writer = csv.DictWriter(out, ["n", "c", "algorithm", "millis", "dp_evaluations"])
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mcs", description="Minimum consistent subset toolkit.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="compute a minimum consistent subset")
    s.add_argument("--input", required=True)
    s.add_argument("--algorithm", choices=["auto", "tree-dp", "brute"], default="auto")
    s.add_argument("--output", default="-")
    s.add_argument("--root", type=int, default=0, help="root vertex for tree-dp")
    s.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP)
    s.add_argument("--budget", type=int, default=None, help="max subsets examined by brute")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", help="check a subset for consistency")
    s.add_argument("--input", required=True)
    s.add_argument("--subset", required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("reduce-max2sat", help="build the tree instance for a 2-CNF formula")
    s.add_argument("--input", required=True, help="DIMACS CNF with two literals per clause")
    s.add_argument("--M", type=int, default=None, help="stabilizer pairs (default n^3)")
    s.add_argument("--output", required=True)
    s.add_argument("--roles")
    s.add_argument("--assignment", help="comma-separated truth values to encode")
    s.add_argument("--subset-out", default="-")
    s.set_defaults(func=cmd_reduce_max2sat)

    s = sub.add_parser("reduce-vertex-cover", help="build the interval instance for a cubic graph")
    s.add_argument("--input", required=True, help="JSON edge list")
    s.add_argument("--p2", type=int, default=None)
    s.add_argument("--p3", type=int, default=None)
    s.add_argument("--output", required=True)
    s.add_argument("--intervals")
    s.add_argument("--roles")
    s.add_argument("--cover", help="comma-separated vertex cover to encode")
    s.add_argument("--subset-out", default="-")
    s.set_defaults(func=cmd_reduce_vertex_cover)

    s = sub.add_parser("gen-random-tree", help="uniform attachment tree with random colors")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--colors", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--output", default="-")
    s.add_argument("--dot", help="also write a Graphviz DOT file")
    s.set_defaults(func=cmd_gen_random_tree)

    s = sub.add_parser("bench", help="time solvers on random trees, CSV output")
    s.add_argument("--sizes", type=_int_list, default=[25, 50, 100])
    s.add_argument("--colors", type=_int_list, default=[2])
    s.add_argument("--trials", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--algorithms", type=lambda t: t.split(","), default=["tree-dp"])
    s.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--output", default="-")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except MCSError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except argparse.ArgumentTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
