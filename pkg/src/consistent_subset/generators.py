from __future__ import annotations

import random

from .graph import ColoredGraph, build_graph


def compact_colors(colors):
    """Relabel used colors to 0..k-1, preserving their order."""
    rank = {q: r for r, q in enumerate(sorted(set(colors)))}
    return [rank[q] for q in colors]


def random_tree(n: int, c: int, seed: int) -> ColoredGraph:
    """Uniform attachment tree with i.i.d. uniform colors over ``[0, c)``."""
    if n < 1 or c < 1:
        raise ValueError("need n >= 1 and c >= 1")
    rng = random.Random(seed)
    edges = [(rng.randrange(k), k) for k in range(1, n)]
    colors = [rng.randrange(c) for _ in range(n)]
    return build_graph(compact_colors(colors), edges)


def _free_tree_parents(n: int):
    # level sequences of rooted trees; keep those whose canonical form is
    # unique under rerooting by brute-force canonicalization
    seen = set()
    for parents in _all_parent_arrays(n):
        key = _free_canon(n, parents)
        if key not in seen:
            seen.add(key)
            yield parents


def _all_parent_arrays(n: int):
    if n == 1:
        yield ()
        return

    def rec(k, acc):
        if k == n:
            yield tuple(acc)
            return
        for p in range(k):
            acc.append(p)
            yield from rec(k + 1, acc)
            acc.pop()

    yield from rec(1, [])


def _free_canon(n: int, parents) -> str:
    adj = [[] for _ in range(n)]
    for k, p in enumerate(parents, start=1):
        adj[k].append(p)
        adj[p].append(k)

    def enc(v, par):
        return "(" + "".join(sorted(enc(w, v) for w in adj[v] if w != par)) + ")"

    return min(enc(r, -1) for r in range(n))


def all_free_trees(n: int) -> list[list[tuple[int, int]]]:
    """Edge lists of every unlabeled tree on ``n`` vertices, one per shape."""
    return [[(p, k) for k, p in enumerate(parents, start=1)] for parents in _free_tree_parents(n)]
