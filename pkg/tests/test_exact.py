import random

import pytest

from consistent_subset.errors import BudgetExhausted, InstanceTooLarge
from consistent_subset.exact import color_count_lower_bound, mcs_brute_force
from consistent_subset.graph import build_graph, is_consistent
from consistent_subset.reductions import Max2SatInstance, max2sat_to_tree

from conftest import fast_mcs_size, naive_mcs_size, random_connected_graph

TRIANGLE = build_graph([0, 0, 0], [[0, 1], [1, 2], [0, 2]])
EDGE = build_graph([0, 1], [[0, 1]])
STAR = build_graph([0, 1, 1, 1], [[0, 1], [0, 2], [0, 3]])
RRBB = build_graph([0, 0, 1, 1], [[0, 1], [1, 2], [2, 3]])


def test_lower_bound():
    assert color_count_lower_bound(build_graph([0, 0, 0], [[0, 1], [1, 2]])) == 1
    assert color_count_lower_bound(EDGE) == 2
    fig1 = max2sat_to_tree(Max2SatInstance.of(3, [(1, 2), (1, -3), (-2, -3)]), 27)
    assert color_count_lower_bound(fig1.tree) == 91


def test_small_anchors():
    assert mcs_brute_force(TRIANGLE).size == 1
    assert mcs_brute_force(EDGE).size == 2
    # oracle: unpruned enumeration over every subset
    assert naive_mcs_size(STAR) == 4
    assert mcs_brute_force(STAR).size == 4
    assert naive_mcs_size(RRBB) == 2
    r = mcs_brute_force(RRBB)
    assert r.size == 2 and r.subset == (0, 2)


def test_lexicographic_first():
    assert mcs_brute_force(TRIANGLE).subset == (0,)


def test_caps():
    big = build_graph([0] * 23, [[k, k + 1] for k in range(22)])
    with pytest.raises(InstanceTooLarge):
        mcs_brute_force(big)
    assert mcs_brute_force(big, size_cap=30).size == 1
    with pytest.raises(BudgetExhausted):
        mcs_brute_force(STAR, budget=2)


def test_matches_unpruned_and_minimal():
    rng = random.Random(5)
    for _ in range(120):
        n = rng.randint(1, 10)
        g = random_connected_graph(rng, n, rng.randint(1, 3), rng.randint(0, 5))
        r = mcs_brute_force(g)
        assert is_consistent(g, r.subset)
        assert r.size == len(r.subset) >= color_count_lower_bound(g)
        assert r.size == mcs_brute_force(g, prune=False).size == fast_mcs_size(g)


def test_minimal_up_to_twelve():
    rng = random.Random(11)
    for _ in range(8):
        g = random_connected_graph(rng, 12, 3, 3)
        assert mcs_brute_force(g).size == fast_mcs_size(g)
