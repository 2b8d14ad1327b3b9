from .centrality import betweenness, closeness, distances, geodesics
from .connectivity import (
    DEFAULT_SEED,
    eq_mat_to_part,
    reach_degrees,
    reachability,
    renumber_partition,
    strong_connectivity,
    weak_connectivity,
)
from .cooccurrence import EventTable, affiliation_matrix, co_occurrence
from .measures import activity, attraction, clus_coef, degrees
from .pathfinder import path_finder, pf_check

__all__ = [
    "DEFAULT_SEED",
    "EventTable",
    "activity",
    "affiliation_matrix",
    "attraction",
    "betweenness",
    "closeness",
    "clus_coef",
    "co_occurrence",
    "degrees",
    "distances",
    "eq_mat_to_part",
    "geodesics",
    "path_finder",
    "pf_check",
    "reach_degrees",
    "reachability",
    "renumber_partition",
    "strong_connectivity",
    "weak_connectivity",
]
