from .max2sat import (
    Max2SatInstance,
    TreeReductionArtifact,
    assignment_to_subset,
    count_satisfied,
    max2sat_to_tree,
    min_stabilizers,
    n_of_k,
    subset_to_assignment,
)
from .vertex_cover import (
    IntervalReductionArtifact,
    cover_to_subset,
    is_vertex_cover,
    min_vertex_cover,
    subset_to_cover,
    vertex_cover_to_intervals,
)

__all__ = [
    "IntervalReductionArtifact",
    "Max2SatInstance",
    "TreeReductionArtifact",
    "assignment_to_subset",
    "count_satisfied",
    "cover_to_subset",
    "is_vertex_cover",
    "max2sat_to_tree",
    "min_stabilizers",
    "min_vertex_cover",
    "n_of_k",
    "subset_to_assignment",
    "subset_to_cover",
    "vertex_cover_to_intervals",
]
