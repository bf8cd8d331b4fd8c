"""Minimum consistent subsets of vertex-colored graphs."""

from .exact import color_count_lower_bound, mcs_brute_force
from .graph import (
    ColoredGraph,
    Interval,
    IntervalFamily,
    build_graph,
    distances_from,
    intervals_to_graph,
    is_consistent,
    nearest_neighbors,
)
from .result import SolveResult
from .tree_dp import DpKey, DpValue, RootedTree, TreeDP, dp_entry, root_tree, solve_tree_mcs

__all__ = [
    "ColoredGraph",
    "DpKey",
    "DpValue",
    "Interval",
    "IntervalFamily",
    "RootedTree",
    "SolveResult",
    "TreeDP",
    "build_graph",
    "color_count_lower_bound",
    "distances_from",
    "dp_entry",
    "intervals_to_graph",
    "is_consistent",
    "mcs_brute_force",
    "nearest_neighbors",
    "root_tree",
    "solve_tree_mcs",
]
