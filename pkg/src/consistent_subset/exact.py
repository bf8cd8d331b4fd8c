"""Exhaustive minimum consistent subset search for small graphs."""

from __future__ import annotations

import time
from itertools import combinations

from .errors import BudgetExhausted, InstanceTooLarge
from .graph import ColoredGraph, distance_matrix
from .result import SolveResult

DEFAULT_SIZE_CAP = 22


def color_count_lower_bound(g: ColoredGraph) -> int:
    """Every color class needs a member in any consistent subset."""
    return len(set(g.colors))


def _consistent_with(dist: list[list[int]], colors: tuple[int, ...], s: tuple[int, ...]) -> bool:
    for v, row in enumerate(dist):
        best = min(row[u] for u in s)
        cv = colors[v]
        if not any(row[u] == best and colors[u] == cv for u in s):
            return False
    return True


def mcs_brute_force(
    g: ColoredGraph,
    budget: int | None = None,
    *,
    size_cap: int = DEFAULT_SIZE_CAP,
    prune: bool = True,
) -> SolveResult:
    """Return the lexicographically first minimum-cardinality consistent subset.

    Cardinalities are tried in increasing order. With ``prune`` set, subsets
    missing some color are skipped without a consistency check; ``budget``
    bounds the number of consistency checks.
    """
    n = g.vertex_count
    if n > size_cap:
        raise InstanceTooLarge(f"{n} vertices exceeds brute-force cap {size_cap}")
    start = time.perf_counter()
    dist = distance_matrix(g)
    colors = g.colors
    palette = set(colors)
    examined = 0
    first = color_count_lower_bound(g) if prune else 1
    for k in range(first, n + 1):
        for s in combinations(range(n), k):
            if prune and len({colors[u] for u in s}) != len(palette):
                continue
            if budget is not None and examined >= budget:
                raise BudgetExhausted(f"no solution within {budget} subsets")
            examined += 1
            if _consistent_with(dist, colors, s):
                return SolveResult(
                    k,
                    s,
                    "brute",
                    {"subsets_examined": examined, "elapsed": time.perf_counter() - start},
                )
    raise AssertionError("the full vertex set is always consistent")
