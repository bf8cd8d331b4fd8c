"""Minimum consistent subset of a colored tree by dynamic programming over
rooted prefix subtrees, parameterized by the number of colors.

Terminology: ``T_i(v)`` is the subtree of ``v`` restricted to its first
``i`` children, ``T_{i+}(v)`` the forest of the remaining children's
subtrees. A table entry is keyed by ``(v, i, d_in, d_out, d_sib, c_in,
c_out, c_sib)``: the nearest chosen vertices seen from ``v`` inside
``T_i(v)``, outside ``T(v)``, and in ``T_{i+}(v)``, with the color sets
(bit masks) of those nearest vertices. Its value is the fewest vertices of
``T_i(v)`` that realize ``(d_in, c_in)`` and make every vertex of
``T_i(v)`` consistent given the outside and sibling parameters.
"""

from __future__ import annotations

import os
import sys
import time
from dataclasses import dataclass
from typing import NamedTuple

from .errors import ColorCapExceeded, NonCanonicalKey, NotATree
from .graph import ColoredGraph, VertexSubset, distances_from
from .result import SolveResult

INF = 10**9
DEFAULT_COLOR_CAP = 16


def color_cap_from_env() -> int:
    raw = os.environ.get("MCS_COLOR_CAP")
    return int(raw) if raw else DEFAULT_COLOR_CAP


def _inc(d: int) -> int:
    return d if d >= INF else d + 1


def _dec(d: int) -> int:
    return d if d >= INF else d - 1


@dataclass(frozen=True)
class RootedTree:
    base: ColoredGraph
    root: int
    parent: tuple[int | None, ...]
    children: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.base.vertex_count

    def eta(self, v: int) -> int:
        return len(self.children[v])


def root_tree(g: ColoredGraph, root: int = 0) -> RootedTree:
    if not g.is_tree():
        raise NotATree(f"{g.edge_count} edges on {g.vertex_count} vertices")
    dist = distances_from(g, root)
    parent: list[int | None] = [None] * g.vertex_count
    children: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for v in range(g.vertex_count):
        for w in g.adjacency[v]:
            if dist[w] == dist[v] + 1:
                parent[w] = v
                children[v].append(w)
    return RootedTree(g, root, tuple(parent), tuple(tuple(sorted(ch)) for ch in children))


class DpKey(NamedTuple):
    v: int
    i: int
    d_in: int
    d_out: int
    d_sib: int
    c_in: int
    c_out: int
    c_sib: int


class DpValue(NamedTuple):
    """``cost`` is INF when no partial solution exists.

    ``choice`` is ``("base_empty",)`` for an unchosen single vertex,
    ``("take", child_keys)`` when ``v`` is chosen (one full-subtree key per
    child in the prefix), or ``(case, prefix_key, child_key)`` with ``case``
    in 4..7 for a split between ``T_{i-1}(v)`` and the ``i``-th child.
    """

    cost: int
    choice: tuple | None


_INFEASIBLE = (INF, None)


def _submasks_ascending(mask: int) -> list[int]:
    subs = []
    s = mask
    while True:
        subs.append(s)
        if s == 0:
            break
        s = (s - 1) & mask
    subs.reverse()
    return subs


class TreeDP:
    """Memoized table for one rooted tree.

    With ``normalize`` set, outside and sibling parameters are merged
    before the memo lookup (only their joint minimum and the colors at it
    are visible from inside ``T_i(v)``), and dropped entirely when strictly
    farther than ``d_in``. This leaves entry values unchanged and shrinks
    the reachable table by a factor of about ``n``.
    """

    def __init__(self, tree: RootedTree, color_cap: int | None = None, *, normalize: bool = True):
        cap = color_cap_from_env() if color_cap is None else color_cap
        c = tree.base.color_count
        if c > cap:
            raise ColorCapExceeded(f"{c} colors exceeds cap {cap}")
        self.tree = tree
        self.normalize = normalize
        self.c = c
        self.full_mask = (1 << c) - 1
        self.nonempty_masks = list(range(1, 1 << c))
        self.memo: dict[tuple, tuple] = {}
        self.evaluations = 0
        self._best_child: dict[tuple[int, int], tuple] = {}
        self._heights = self._prefix_heights()

    def _prefix_heights(self) -> list[list[int]]:
        # heights[v][i] = height of T_i(v)
        t = self.tree
        order = [t.root]
        for v in order:
            order.extend(t.children[v])
        heights: list[list[int]] = [[] for _ in range(t.n)]
        for v in reversed(order):
            h = [0]
            for u in t.children[v]:
                h.append(max(h[-1], heights[u][-1] + 1))
            heights[v] = h
        return heights

    def height(self, v: int, i: int | None = None) -> int:
        h = self._heights[v]
        return h[-1] if i is None else h[i]

    # -- public entry points -------------------------------------------------

    def check_key(self, k: DpKey) -> None:
        t = self.tree
        if not 0 <= k.v < t.n or not 0 <= k.i <= t.eta(k.v):
            raise NonCanonicalKey(f"no prefix subtree ({k.v}, {k.i})")
        for d, cs, low in ((k.d_in, k.c_in, 0), (k.d_out, k.c_out, 1), (k.d_sib, k.c_sib, 1)):
            if cs & ~self.full_mask:
                raise NonCanonicalKey(f"color set {cs:b} outside palette")
            if (d >= INF) != (cs == 0) or d < low or (d < INF and d > t.n):
                raise NonCanonicalKey(f"distance {d} with color set {cs:b}")

    def entry(self, k: DpKey) -> DpValue:
        self.check_key(k)
        with _deep_recursion(self.tree.n):
            return DpValue(*self._entry(*k))

    def solve(self) -> SolveResult:
        start = time.perf_counter()
        t = self.tree
        best = _INFEASIBLE
        best_key = None
        with _deep_recursion(t.n):
            for d in range(0, self.height(t.root) + 1):
                for cin in self.nonempty_masks:
                    key = (t.root, t.eta(t.root), d, INF, INF, cin, 0, 0)
                    val = self._entry(*key)
                    if val[0] < best[0]:
                        best, best_key = val, key
        subset = self.reconstruct(DpKey(*best_key))
        assert len(subset) == best[0]
        return SolveResult(
            best[0],
            subset,
            "tree-dp",
            {
                "dp_evaluations": self.evaluations,
                "elapsed": time.perf_counter() - start,
            },
        )

    def reconstruct(self, k: DpKey) -> VertexSubset:
        """Vertices of a minimum partial solution for ``k``."""
        chosen = []
        stack = [tuple(k)]
        with _deep_recursion(self.tree.n):
            while stack:
                key = stack.pop()
                cost, choice = self._entry(*key)
                if cost >= INF:
                    raise ValueError(f"no partial solution for {DpKey(*key)}")
                tag = choice[0]
                if tag == "take":
                    chosen.append(key[0])
                    stack.extend(choice[1])
                elif tag != "base_empty":
                    stack.append(choice[1])
                    stack.append(choice[2])
        return tuple(sorted(chosen))

    # -- recurrence ------------------------------------------------------------

    def _entry(self, v, i, d_in, d_out, d_sib, c_in, c_out, c_sib):
        if d_in < INF and d_in > self._heights[v][i]:
            return _INFEASIBLE
        if self.normalize:
            ext = min(d_out, d_sib)
            c_ext = (c_out if d_out == ext else 0) | (c_sib if d_sib == ext else 0)
            if d_in < ext:
                ext, c_ext = INF, 0
            elif d_in >= INF and ext < INF:
                ext = 1
            key = (v, i, d_in, ext, INF, c_in, c_ext, 0)
        else:
            key = (v, i, d_in, d_out, d_sib, c_in, c_out, c_sib)
        val = self.memo.get(key)
        if val is None:
            self.evaluations += 1
            val = self._evaluate(*key)
            self.memo[key] = val
        return val

    def _evaluate(self, v, i, d_in, d_out, d_sib, c_in, c_out, c_sib):
        t = self.tree
        cv = 1 << t.base.colors[v]
        d_min = min(d_in, d_out, d_sib)
        c_min = (
            (c_in if d_in == d_min else 0)
            | (c_sib if d_sib == d_min else 0)
            | (c_out if d_out == d_min else 0)
        )
        # v must see its own color among its nearest chosen vertices
        if d_min >= INF or not c_min & cv:
            return _INFEASIBLE
        if d_in == 0:
            if c_in != cv:
                return _INFEASIBLE
            total = 1
            picks = []
            for u in t.children[v][:i]:
                cost, key = self._best_child_entry(u, cv)
                if cost >= INF:
                    return _INFEASIBLE
                total += cost
                picks.append(key)
            return (total, ("take", tuple(picks)))
        if i == 0:
            # T_0(v) = {v} and v is not chosen
            return (0, ("base_empty",)) if d_in >= INF else _INFEASIBLE

        u = t.children[v][i - 1]
        eta_u = len(t.children[u])
        h_prefix = self._heights[v][i - 1]
        h_child = self._heights[u][-1] + 1  # farthest vertex of T(u) from v
        entry = self._entry
        best = INF
        choice = None

        if d_in >= INF:
            # nothing chosen in T_i(v): both parts are empty
            c_child = (c_sib if d_sib == d_min else 0) | (c_out if d_out == d_min else 0)
            pre = (v, i - 1, INF, d_out, d_sib, 0, c_out, c_sib)
            chi = (u, eta_u, INF, d_min + 1, INF, 0, c_child, 0)
            p = entry(*pre)[0]
            if p < INF:
                q = entry(*chi)[0]
                if q < INF:
                    return (p + q, (7, pre, chi))
            return _INFEASIBLE

        d_x = min(d_in, d_sib)

        # nearest chosen vertices on both sides of the split, colors shared out
        subs = _submasks_ascending(c_in)
        for c_a in subs:
            if not c_a:
                continue
            for c_b in subs:
                if not c_b or c_a | c_b != c_in:
                    continue
                if d_in < d_sib:
                    c_sib_pre = c_b
                elif d_in == d_sib:
                    c_sib_pre = c_b | c_sib
                else:
                    c_sib_pre = c_sib
                c_out_chi = (
                    (c_a if d_in == d_min else 0)
                    | (c_sib if d_sib == d_min else 0)
                    | (c_out if d_out == d_min else 0)
                )
                pre = (v, i - 1, d_in, d_out, d_x, c_a, c_out, c_sib_pre)
                p = entry(*pre)[0]
                if p >= best:
                    continue
                chi = (u, eta_u, d_in - 1, d_min + 1, INF, c_b, c_out_chi, 0)
                q = entry(*chi)[0]
                if p + q < best:
                    best, choice = p + q, (4, pre, chi)

        # the child subtree alone attains d_in; the prefix is strictly farther
        if d_in - 1 <= self._heights[u][-1]:
            if d_in < d_sib:
                c_sib_pre = c_in
            elif d_in == d_sib:
                c_sib_pre = c_in | c_sib
            else:
                c_sib_pre = c_sib
            for delta, cs in self._far_options(d_in, h_prefix):
                pre = (v, i - 1, delta, d_out, d_x, cs, c_out, c_sib_pre)
                p = entry(*pre)[0]
                if p >= best:
                    continue
                dm = min(delta, d_sib, d_out)
                c_out_chi = (
                    (cs if delta == dm else 0)
                    | (c_sib if d_sib == dm else 0)
                    | (c_out if d_out == dm else 0)
                )
                chi = (u, eta_u, d_in - 1, _inc(dm), INF, c_in, c_out_chi, 0)
                q = entry(*chi)[0]
                if p + q < best:
                    best, choice = p + q, (5, pre, chi)

        # the prefix alone attains d_in; the child subtree is strictly farther
        c_out_chi = (
            (c_in if d_in == d_min else 0)
            | (c_sib if d_sib == d_min else 0)
            | (c_out if d_out == d_min else 0)
        )
        for delta, cs in self._far_options(d_in, h_child):
            dx = min(d_sib, delta)
            c_sib_pre = (cs if delta == dx else 0) | (c_sib if d_sib == dx else 0)
            pre = (v, i - 1, d_in, d_out, dx, c_in, c_out, c_sib_pre)
            p = entry(*pre)[0]
            if p >= best:
                continue
            chi = (u, eta_u, _dec(delta), d_min + 1, INF, cs, c_out_chi, 0)
            q = entry(*chi)[0]
            if p + q < best:
                best, choice = p + q, (6, pre, chi)

        return (best, choice) if choice is not None else _INFEASIBLE

    def _far_options(self, d_in: int, d_max: int):
        for delta in range(d_in + 1, d_max + 1):
            for cs in self.nonempty_masks:
                yield delta, cs
        yield INF, 0

    def _best_child_entry(self, u: int, c_parent: int) -> tuple[int, tuple]:
        """Cheapest full-subtree entry for child ``u`` whose parent is chosen."""
        memo_key = (u, c_parent)
        hit = self._best_child.get(memo_key)
        if hit is not None:
            return hit
        eta_u = len(self.tree.children[u])
        best = (INF, None)
        options = [(d, cs) for d in range(self._heights[u][-1] + 1) for cs in self.nonempty_masks]
        options.append((INF, 0))
        for d, cs in options:
            key = (u, eta_u, d, 1, INF, cs, c_parent, 0)
            cost = self._entry(*key)[0]
            if cost < best[0]:
                best = (cost, key)
        self._best_child[memo_key] = best
        return best


class _deep_recursion:
    """Raise the interpreter recursion limit for the duration of a solve."""

    def __init__(self, n: int):
        self.limit = max(sys.getrecursionlimit(), 8 * n + 2000)

    def __enter__(self):
        self.saved = sys.getrecursionlimit()
        sys.setrecursionlimit(self.limit)

    def __exit__(self, *exc):
        sys.setrecursionlimit(self.saved)
        return False


def dp_entry(t: RootedTree, k: DpKey, *, color_cap: int | None = None) -> DpValue:
    return TreeDP(t, color_cap).entry(k)


def solve_tree_mcs(
    t: RootedTree | ColoredGraph,
    *,
    color_cap: int | None = None,
    normalize: bool = True,
) -> SolveResult:
    if isinstance(t, ColoredGraph):
        t = root_tree(t)
    return TreeDP(t, color_cap, normalize=normalize).solve()
