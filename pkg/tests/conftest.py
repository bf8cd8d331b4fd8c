import random
from itertools import combinations

import pytest

from consistent_subset.generators import compact_colors
from consistent_subset.graph import build_graph, distance_matrix, nearest_neighbors


def random_colored_tree(rng: random.Random, n: int, c: int):
    edges = [(rng.randrange(k), k) for k in range(1, n)]
    colors = compact_colors([rng.randrange(c) for _ in range(n)])
    return build_graph(colors, edges)


def random_connected_graph(rng: random.Random, n: int, c: int, extra: int):
    g = random_colored_tree(rng, n, c)
    edges = set(g.edges())
    for _ in range(extra):
        a, b = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return build_graph(g.colors, sorted(edges))


def consistent_by_definition(g, s) -> bool:
    """Literal check: C(v) in C(NN(v, s)) for every vertex."""
    return all(
        g.colors[v] in {g.colors[u] for u in nearest_neighbors(g, v, s)}
        for v in range(g.vertex_count)
    )


def naive_mcs_size(g) -> int:
    """Smallest consistent subset by unpruned enumeration over all subsets."""
    for k in range(1, g.vertex_count + 1):
        for s in combinations(range(g.vertex_count), k):
            if consistent_by_definition(g, s):
                return k
    raise AssertionError


def fast_mcs_size(g) -> int:
    """Unpruned enumeration with a precomputed distance matrix."""
    dist = distance_matrix(g)
    col = g.colors
    for k in range(1, g.vertex_count + 1):
        for s in combinations(range(g.vertex_count), k):
            ok = True
            for v in range(g.vertex_count):
                best = min(dist[v][u] for u in s)
                if not any(dist[v][u] == best and col[u] == col[v] for u in s):
                    ok = False
                    break
            if ok:
                return k
    raise AssertionError


@pytest.fixture
def rng():
    return random.Random(20240615)


# -- acceptance reporting ------------------------------------------------------

_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
