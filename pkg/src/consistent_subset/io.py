"""Instance, subset and formula file formats."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import InvalidInstance, IoError, NotTwoCnf, ParseError
from .graph import ColoredGraph, IntervalFamily, build_graph
from .reductions.max2sat import Max2SatInstance


def _read_text(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc


def read_json(path) -> Any:
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def write_json(path, obj) -> None:
    try:
        Path(path).write_text(dumps(obj))
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def _int_list(obj, name: str, path) -> list:
    if not isinstance(obj, list):
        raise ParseError(f"{path}: '{name}' must be a list")
    return obj


def graph_from_json(doc, path="<input>") -> ColoredGraph:
    if not isinstance(doc, dict) or "colors" not in doc:
        raise ParseError(f"{path}: expected an object with 'colors' and 'edges'")
    colors = _int_list(doc["colors"], "colors", path)
    edges = _int_list(doc.get("edges", []), "edges", path)
    if not all(isinstance(q, int) for q in colors):
        raise ParseError(f"{path}: colors must be integers")
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise ParseError(f"{path}: bad edge {e!r}")
    return build_graph(colors, edges)


def parse_instance(path) -> ColoredGraph:
    return graph_from_json(read_json(path), path)


def parse_intervals(path) -> IntervalFamily:
    doc = read_json(path)
    try:
        triples = [(iv["lo"], iv["hi"], iv["color"]) for iv in doc["intervals"]]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"{path}: expected {{'intervals': [{{lo, hi, color}}, ...]}}") from exc
    return IntervalFamily.from_triples(triples)


def parse_subset(path) -> list[int]:
    doc = read_json(path)
    if not isinstance(doc, dict) or not isinstance(doc.get("subset"), list):
        raise ParseError(f"{path}: expected {{'subset': [...]}}")
    return [int(x) for x in doc["subset"]]


def parse_edge_list(path) -> list[tuple[int, int]]:
    doc = read_json(path)
    edges = doc.get("edges") if isinstance(doc, dict) else doc
    if not isinstance(edges, list):
        raise ParseError(f"{path}: expected an edge list")
    try:
        return [(int(a), int(b)) for a, b in edges]
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{path}: bad edge entry") from exc


def parse_dimacs_2cnf_text(text: str, source="<input>") -> Max2SatInstance:
    header = None
    tokens: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"{source}:{lineno}: bad problem line {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError as exc:
                raise ParseError(f"{source}:{lineno}: bad problem line {line!r}") from exc
            continue
        if header is None:
            raise ParseError(f"{source}:{lineno}: clause before problem line")
        try:
            tokens.extend(int(x) for x in line.split())
        except ValueError as exc:
            raise ParseError(f"{source}:{lineno}: non-integer literal") from exc
    if header is None:
        raise ParseError(f"{source}: missing 'p cnf' line")

    clauses = []
    current: list[int] = []
    for tok in tokens:
        if tok == 0:
            if len(current) != 2:
                raise NotTwoCnf(f"{source}: clause {current} has {len(current)} literals")
            clauses.append(tuple(current))
            current = []
        else:
            current.append(tok)
    if current:
        raise ParseError(f"{source}: last clause is not 0-terminated")
    n, m = header
    if m != len(clauses):
        raise ParseError(f"{source}: header declares {m} clauses, found {len(clauses)}")
    try:
        return Max2SatInstance(n, tuple(clauses))
    except InvalidInstance as exc:
        raise ParseError(f"{source}: {exc}") from exc


def parse_dimacs_2cnf(path) -> Max2SatInstance:
    return parse_dimacs_2cnf_text(_read_text(path), path)


def to_dot(g: ColoredGraph) -> str:
    lines = ["graph G {"]
    lines += [f'  {v} [label="{v}:{q}"];' for v, q in enumerate(g.colors)]
    lines += [f"  {a} -- {b};" for a, b in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
