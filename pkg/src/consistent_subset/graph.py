"""Vertex-colored graphs, hop distances and nearest-neighbor consistency."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    ColorGap,
    DisconnectedGraph,
    DuplicateEdge,
    EmptySubset,
    InvalidInstance,
    InvalidVertex,
    SelfLoop,
)

VertexSubset = tuple[int, ...]


@dataclass(frozen=True)
class ColoredGraph:
    """Connected undirected graph with one color per vertex.

    Build instances with :func:`build_graph`; the constructor does not
    validate.
    """

    adjacency: tuple[tuple[int, ...], ...]
    colors: tuple[int, ...]
    color_count: int

    @property
    def vertex_count(self) -> int:
        return len(self.colors)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u, nbrs in enumerate(self.adjacency) for w in nbrs if u < w]

    def is_tree(self) -> bool:
        return self.edge_count == self.vertex_count - 1

    def to_json(self) -> dict:
        return {"colors": list(self.colors), "edges": [list(e) for e in self.edges()]}


def build_graph(vertex_colors: Sequence[int], edges: Iterable[Sequence[int]]) -> ColoredGraph:
    n = len(vertex_colors)
    if n == 0:
        raise InvalidInstance("graph has no vertices")
    colors = tuple(int(c) for c in vertex_colors)
    if min(colors) < 0:
        raise InvalidInstance("negative color id")
    c = max(colors) + 1
    missing = set(range(c)) - set(colors)
    if missing:
        raise ColorGap(f"colors {sorted(missing)} unused; palette must be 0..{c - 1}")

    nbrs: list[list[int]] = [[] for _ in range(n)]
    seen = set()
    for e in edges:
        if len(e) != 2:
            raise InvalidInstance(f"edge {e!r} does not have two endpoints")
        u, w = int(e[0]), int(e[1])
        for x in (u, w):
            if not 0 <= x < n:
                raise InvalidVertex(f"edge endpoint {x} out of range [0, {n})")
        if u == w:
            raise SelfLoop(f"self-loop at {u}")
        key = (min(u, w), max(u, w))
        if key in seen:
            raise DuplicateEdge(f"duplicate edge {key}")
        seen.add(key)
        nbrs[u].append(w)
        nbrs[w].append(u)

    g = ColoredGraph(tuple(tuple(sorted(x)) for x in nbrs), colors, c)
    if min(distances_from(g, 0, _check=False)) < 0:
        raise DisconnectedGraph("graph is not connected")
    return g


def _check_vertex(g: ColoredGraph, v: int) -> None:
    if not 0 <= v < g.vertex_count:
        raise InvalidVertex(f"vertex {v} out of range [0, {g.vertex_count})")


def distances_from(g: ColoredGraph, v: int, *, _check: bool = True) -> list[int]:
    """BFS hop distances from ``v``; unreachable vertices get -1."""
    if _check:
        _check_vertex(g, v)
    dist = [-1] * g.vertex_count
    dist[v] = 0
    queue = deque([v])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def distance_matrix(g: ColoredGraph) -> list[list[int]]:
    return [distances_from(g, v, _check=False) for v in range(g.vertex_count)]


def as_subset(g: ColoredGraph, members: Iterable[int]) -> VertexSubset:
    """Normalize ``members`` to a sorted, duplicate-free tuple of valid ids."""
    s = tuple(sorted({int(x) for x in members}))
    for x in s:
        _check_vertex(g, x)
    return s


def nearest_neighbors(g: ColoredGraph, v: int, s: Iterable[int]) -> VertexSubset:
    s = as_subset(g, s)
    if not s:
        raise EmptySubset("nearest neighbors of an empty set are undefined")
    dist = distances_from(g, v)
    best = min(dist[u] for u in s)
    return tuple(u for u in s if dist[u] == best)


def nearest_color_masks(g: ColoredGraph, s: Sequence[int]) -> tuple[list[int], list[int]]:
    """Multi-source BFS from ``s``.

    Returns ``(dist, mask)`` where ``dist[v] = d(v, s)`` and bit ``q`` of
    ``mask[v]`` is set iff some member of NN(v, s) has color ``q``. The
    nearest sources of ``v`` are the union of the nearest sources of its
    neighbors one layer closer, so masks propagate layer by layer.
    """
    n = g.vertex_count
    dist = [-1] * n
    mask = [0] * n
    colors = g.colors
    frontier = []
    for u in s:
        if dist[u] < 0:
            dist[u] = 0
            mask[u] = 1 << colors[u]
            frontier.append(u)
    adj = g.adjacency
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            mu = mask[u]
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = d
                    mask[w] = mu
                    nxt.append(w)
                elif dist[w] == d:
                    mask[w] |= mu
        frontier = nxt
    return dist, mask


class Verdict(NamedTuple):
    consistent: bool
    violator: int | None = None

    def __bool__(self) -> bool:
        return self.consistent


def is_consistent(g: ColoredGraph, s: Iterable[int]) -> Verdict:
    """Check that every vertex finds its own color among its nearest members of ``s``."""
    s = as_subset(g, s)
    if not s:
        raise EmptySubset("consistency of an empty subset is undefined")
    _, mask = nearest_color_masks(g, s)
    for v, q in enumerate(g.colors):
        if not mask[v] >> q & 1:
            return Verdict(False, v)
    return Verdict(True)


@dataclass(frozen=True)
class Interval:
    lo: int
    hi: int
    color: int

    def overlaps(self, other: Interval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi


@dataclass(frozen=True)
class IntervalFamily:
    """Colored closed intervals; the interval id is its position."""

    intervals: tuple[Interval, ...]
    color_count: int

    def __post_init__(self):
        for k, iv in enumerate(self.intervals):
            if iv.lo > iv.hi:
                raise InvalidInstance(f"interval {k} has lo > hi")
            if not 0 <= iv.color < self.color_count:
                raise InvalidInstance(f"interval {k} color {iv.color} out of range")

    def __len__(self) -> int:
        return len(self.intervals)

    @classmethod
    def from_triples(cls, triples: Iterable[Sequence[int]]) -> IntervalFamily:
        ivs = tuple(Interval(int(lo), int(hi), int(c)) for lo, hi, c in triples)
        if not ivs:
            raise InvalidInstance("empty interval family")
        return cls(ivs, max(iv.color for iv in ivs) + 1)

    def to_json(self) -> dict:
        return {
            "intervals": [{"lo": iv.lo, "hi": iv.hi, "color": iv.color} for iv in self.intervals]
        }


def interval_edges(f: IntervalFamily) -> list[tuple[int, int]]:
    """All pairs of intersecting closed intervals, by endpoint sweep."""
    order = sorted(range(len(f.intervals)), key=lambda k: (f.intervals[k].lo, k))
    active: list[int] = []
    edges = []
    for k in order:
        lo = f.intervals[k].lo
        active = [a for a in active if f.intervals[a].hi >= lo]
        edges.extend((min(a, k), max(a, k)) for a in active)
        active.append(k)
    return sorted(edges)


def intervals_to_graph(f: IntervalFamily) -> ColoredGraph:
    if not f.intervals:
        raise InvalidInstance("empty interval family")
    return build_graph([iv.color for iv in f.intervals], interval_edges(f))
