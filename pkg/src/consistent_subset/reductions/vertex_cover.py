"""Vertex cover on cubic graphs to colored interval families.

Interval ids: the two medium intervals of each edge in edge order (lower
endpoint first), then the small intervals of each vertex gadget, then the
small intervals of each inter-gadget gap, then the universal interval.
Edge ``e_i`` has color ``i``, small intervals color ``m``, and the
universal interval shares color ``0`` with ``e_1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from ..errors import (
    ContainsUniversalInterval,
    InvalidInstance,
    NotACover,
    NotACoverAfterDecode,
    NotCubic,
    PartialGadget,
)
from ..graph import IntervalFamily, Interval, VertexSubset, build_graph


def normalize_cubic(edges: Iterable[Sequence[int]]) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Validate a simple connected 3-regular graph; return ``(n, edges)``."""
    es = [tuple(sorted((int(a), int(b)))) for a, b in edges]
    if not es:
        raise NotCubic("empty edge list")
    n = 1 + max(b for _, b in es)
    # surfaces self-loops, duplicates and disconnection as graph errors
    build_graph([0] * n, es)
    degree = [0] * n
    for a, b in es:
        degree[a] += 1
        degree[b] += 1
    bad = [v for v, d in enumerate(degree) if d != 3]
    if bad:
        raise NotCubic(f"vertices {bad[:5]} do not have degree 3")
    return n, tuple(es)


def is_vertex_cover(edges: Iterable[Sequence[int]], cover: Iterable[int]) -> bool:
    chosen = set(cover)
    return all(a in chosen or b in chosen for a, b in edges)


def min_vertex_cover(n: int, edges: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Exhaustive search; lexicographically first minimum cover."""
    for k in range(n + 1):
        for cover in combinations(range(n), k):
            if is_vertex_cover(edges, cover):
                return cover
    raise AssertionError("the full vertex set is a cover")


@dataclass
class IntervalReductionArtifact:
    n: int
    edges: tuple[tuple[int, int], ...]
    family: IntervalFamily
    p2: int
    p3: int
    id_role: tuple[str, ...]
    gadgets: tuple[tuple[int, ...], ...]
    universal: int

    @property
    def m(self) -> int:
        return len(self.edges)

    def medium(self, v: int) -> tuple[int, ...]:
        return self.gadgets[v][:3]

    def roles_json(self) -> dict:
        return {
            "kind": "vertex-cover-intervals",
            "n": self.n,
            "edges": [list(e) for e in self.edges],
            "p2": self.p2,
            "p3": self.p3,
            "universal": self.universal,
            "gadgets": [list(gd) for gd in self.gadgets],
            "intervals": list(self.id_role),
        }


def vertex_cover_to_intervals(
    edges: Iterable[Sequence[int]], p2: int | None = None, p3: int | None = None
) -> IntervalReductionArtifact:
    n, es = normalize_cubic(edges)
    p2 = n**3 if p2 is None else p2
    p3 = n**4 if p3 is None else p3
    if p2 < 1 or p3 < 1:
        raise InvalidInstance("padding counts must be positive")
    m = len(es)
    step = 2 * (2 * max(p2, p3) + 2)
    half = step // 2

    triples: list[tuple[int, int, int]] = []
    roles: list[str] = []
    members: list[list[int]] = [[] for _ in range(n)]
    for i, (a, b) in enumerate(es):
        for v in (a, b):
            members[v].append(len(triples))
            roles.append(f"I(e_{i + 1},v_{v + 1})")
            triples.append((step * v, step * v + half, i))
    for v in range(n):
        base = step * v
        for t in range(p2):
            members[v].append(len(triples))
            roles.append(f"small_gadget_{v + 1}_{t + 1}")
            triples.append((base + 1 + 2 * t, base + 2 + 2 * t, m))
    for v in range(n):
        base = step * v + half
        for t in range(p3):
            roles.append(f"small_gap_{v + 1}_{t + 1}")
            triples.append((base + 1 + 2 * t, base + 2 + 2 * t, m))
    universal = len(triples)
    roles.append("I_l")
    triples.append((0, step * n, 0))

    family = IntervalFamily(tuple(Interval(*t) for t in triples), m + 1)
    return IntervalReductionArtifact(
        n=n,
        edges=es,
        family=family,
        p2=p2,
        p3=p3,
        id_role=tuple(roles),
        gadgets=tuple(tuple(gd) for gd in members),
        universal=universal,
    )


def cover_to_subset(art: IntervalReductionArtifact, cover: Iterable[int]) -> VertexSubset:
    cover = sorted(set(cover))
    if not all(0 <= v < art.n for v in cover):
        raise NotACover(f"cover {cover} names vertices outside [0, {art.n})")
    if not is_vertex_cover(art.edges, cover):
        raise NotACover(f"{cover} leaves an edge uncovered")
    return tuple(sorted(x for v in cover for x in art.gadgets[v]))


def subset_to_cover(art: IntervalReductionArtifact, s: Iterable[int]) -> tuple[int, ...]:
    members = set(s)
    if art.universal in members:
        raise ContainsUniversalInterval("subset contains the universal interval")
    cover = []
    for v, gadget in enumerate(art.gadgets):
        present = sum(x in members for x in gadget)
        if present == len(gadget):
            cover.append(v)
        elif present:
            raise PartialGadget(f"gadget {v} is only partly present ({present}/{len(gadget)})")
    if not is_vertex_cover(art.edges, cover):
        raise NotACoverAfterDecode(f"decoded vertices {cover} are not a cover")
    return tuple(cover)
