"""MAX-2SAT to colored-tree construction and solution encoders.

Vertex ids are laid out gadget by gadget: for variable ``i`` the positive
literal path ``x_i^1..4``, the negative one ``xbar_i^1..4``, then the
stabilizers ``s_i^1..M`` and ``sbar_i^1..M``; for clause ``i`` the occurrence
paths ``y_i^1..7``, ``z_i^1..7`` and the clause path ``w_i^1..7``; finally the
central path ``v_1, v_2, v_3``. Role tags use 1-based indices.

Color ids: literal colors (``c_lit_i``, ``c_litbar_i`` interleaved), then
stabilizer colors row-major by ``(i, j)``, then clause colors, then ``c_v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..errors import BadAssignmentLength, InvalidInstance, KOutOfRange, MalformedSolution, MTooSmall
from ..graph import ColoredGraph, VertexSubset, build_graph

PAPER_MIN_SIZE = 50


@dataclass(frozen=True)
class Max2SatInstance:
    num_vars: int
    clauses: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.num_vars < 1:
            raise InvalidInstance("need at least one variable")
        for cl in self.clauses:
            if len(cl) != 2:
                raise InvalidInstance(f"clause {cl} does not have two literals")
            for lit in cl:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise InvalidInstance(f"literal {lit} out of range")

    @classmethod
    def of(cls, num_vars: int, clauses) -> Max2SatInstance:
        return cls(num_vars, tuple((int(a), int(b)) for a, b in clauses))

    @property
    def m(self) -> int:
        return len(self.clauses)


def literal_value(lit: int, assignment: Sequence[bool]) -> bool:
    return bool(assignment[lit - 1]) if lit > 0 else not assignment[-lit - 1]


def count_satisfied(f: Max2SatInstance, assignment: Sequence[bool]) -> int:
    return sum(any(literal_value(lit, assignment) for lit in cl) for cl in f.clauses)


def n_of_k(n: int, m: int, M: int, k: int) -> int:
    """Size of the encoded consistent subset when ``k`` of ``m`` clauses hold."""
    if not 0 <= k <= m:
        raise KOutOfRange(f"k={k} outside [0, {m}]")
    return n * (M + 2) + 2 * k + 3 * (m - k) + 1


def min_stabilizers(n: int, m: int) -> int:
    # smallest M with N(k) < (n + 1) * M for every k
    return 2 * n + 3 * m + 2


@dataclass
class TreeReductionArtifact:
    formula: Max2SatInstance
    M: int
    tree: ColoredGraph
    vertex_role: tuple[str, ...]
    color_role: tuple[str, ...]
    desk_scale: bool
    index: dict[str, int] = field(repr=False, default_factory=dict)

    def __post_init__(self):
        if not self.index:
            self.index = {r: k for k, r in enumerate(self.vertex_role)}

    def vid(self, role: str) -> int:
        return self.index[role]

    def stabilizers(self, i: int, negative: bool) -> list[int]:
        prefix = "sbar" if negative else "s"
        return [self.index[f"{prefix}_{i}^{j}"] for j in range(1, self.M + 1)]

    def clause_gadget(self, i: int) -> list[int]:
        return [self.index[f"{p}_{i}^{a}"] for p in "yzw" for a in range(1, 8)]

    def roles_json(self) -> dict:
        return {
            "kind": "max2sat-tree",
            "num_vars": self.formula.num_vars,
            "clauses": [list(cl) for cl in self.formula.clauses],
            "M": self.M,
            "desk_scale": self.desk_scale,
            "vertices": list(self.vertex_role),
            "colors": list(self.color_role),
        }


def max2sat_to_tree(f: Max2SatInstance, M: int | None = None) -> TreeReductionArtifact:
    n, m = f.num_vars, f.m
    if M is None:
        M = n**3
    if M < min_stabilizers(n, m):
        raise MTooSmall(f"M={M} < 2n+3m+2 = {min_stabilizers(n, m)}; pass a larger M")

    lit_color = {}
    color_role = []
    for i in range(1, n + 1):
        lit_color[i] = len(color_role)
        color_role.append(f"c_lit_{i}")
        lit_color[-i] = len(color_role)
        color_role.append(f"c_litbar_{i}")
    stab_color = {}
    for i in range(1, n + 1):
        for j in range(1, M + 1):
            stab_color[i, j] = len(color_role)
            color_role.append(f"c_s_{i},{j}")
    clause_color = {}
    for i in range(1, m + 1):
        clause_color[i] = len(color_role)
        color_role.append(f"c_w_{i}")
    central_color = len(color_role)
    color_role.append("c_v")

    roles: list[str] = []
    colors: list[int] = []
    edges: list[tuple[int, int]] = []
    index: dict[str, int] = {}

    def add(role: str, color: int) -> int:
        index[role] = len(roles)
        roles.append(role)
        colors.append(color)
        return index[role]

    def path(prefix: str, i: int, length: int, color: int) -> list[int]:
        ids = [add(f"{prefix}_{i}^{a}", color) for a in range(1, length + 1)]
        edges.extend(zip(ids, ids[1:]))
        return ids

    hubs = []
    for i in range(1, n + 1):
        pos = path("x", i, 4, lit_color[i])
        neg = path("xbar", i, 4, lit_color[-i])
        for j in range(1, M + 1):
            edges.append((pos[0], add(f"s_{i}^{j}", stab_color[i, j])))
        for j in range(1, M + 1):
            edges.append((neg[0], add(f"sbar_{i}^{j}", stab_color[i, j])))
        hubs += [pos[0], neg[0]]
    for i, (y, z) in enumerate(f.clauses, start=1):
        ys = path("y", i, 7, lit_color[y])
        zs = path("z", i, 7, lit_color[z])
        ws = path("w", i, 7, clause_color[i])
        edges += [(ys[0], ws[1]), (zs[0], ws[5])]
        hubs.append(ws[3])
    central = [add(f"v_{k}", central_color) for k in (1, 2, 3)]
    edges += [(central[0], central[1]), (central[1], central[2])]
    edges += [(central[0], h) for h in hubs]

    tree = build_graph(colors, edges)
    assert tree.is_tree()
    return TreeReductionArtifact(
        formula=f,
        M=M,
        tree=tree,
        vertex_role=tuple(roles),
        color_role=tuple(color_role),
        desk_scale=n < PAPER_MIN_SIZE or m < PAPER_MIN_SIZE,
        index=index,
    )


def assignment_to_subset(art: TreeReductionArtifact, assignment: Sequence[bool]) -> VertexSubset:
    f = art.formula
    if len(assignment) != f.num_vars:
        raise BadAssignmentLength(f"expected {f.num_vars} values, got {len(assignment)}")
    ix = art.index
    chosen = [ix["v_3"]]
    for i in range(1, f.num_vars + 1):
        if assignment[i - 1]:
            chosen += art.stabilizers(i, negative=False)
            chosen += [ix[f"x_{i}^2"], ix[f"xbar_{i}^4"]]
        else:
            chosen += art.stabilizers(i, negative=True)
            chosen += [ix[f"x_{i}^4"], ix[f"xbar_{i}^2"]]
    for i, (y, z) in enumerate(f.clauses, start=1):
        if literal_value(y, assignment):
            chosen += [ix[f"w_{i}^7"], ix[f"z_{i}^1"]]
        elif literal_value(z, assignment):
            chosen += [ix[f"w_{i}^1"], ix[f"y_{i}^1"]]
        else:
            chosen += [ix[f"w_{i}^1"], ix[f"y_{i}^1"], ix[f"z_{i}^7"]]
    return tuple(sorted(chosen))


def subset_to_assignment(art: TreeReductionArtifact, s) -> tuple[bool, ...]:
    members = set(s)
    values = []
    for i in range(1, art.formula.num_vars + 1):
        pos = all(x in members for x in art.stabilizers(i, negative=False))
        neg = all(x in members for x in art.stabilizers(i, negative=True))
        if pos == neg:
            state = "both" if pos else "neither"
            raise MalformedSolution(f"variable {i}: {state} stabilizer families present")
        values.append(pos)
    return tuple(values)
