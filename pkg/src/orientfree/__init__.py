"""Exact counting and certification of H-free orientations of small graphs."""

from .classifiers import (
    Bipartition,
    Growth,
    classify,
    is_antidirected,
    is_forest,
    is_one_almost_antidirected,
    predicted_growth,
)
from .constructions import (
    UniversalTreeSpec,
    count_universal_tree,
    greedy_embed_forest,
    greedy_embed_tree,
    matching_reversal_family,
    out_star,
    star_freeness_monte_carlo,
    universal_tree,
    universal_tree_minus,
)
from .enumeration import (
    DEFAULT_CAPS,
    Caps,
    CountReport,
    Method,
    count_f_free_subgraphs,
    count_h_free_orientations,
    d_n_h,
    enumerate_oriented_forests,
    ex,
    n_n_f,
)
from .errors import (
    InvalidArgumentError,
    MalformedOrientationError,
    OrientFreeError,
    ParseError,
    ResourceLimitError,
)
from .graphs import Orientation, OrientedGraph, UndirectedGraph, realize, underlying
from .kozma_moran import SetFamily, orientation_family, shattered_sets, verify_kozma_moran
from .pathalgo import (
    Trace,
    VertexState,
    longest_directed_path,
    run_state_algorithm,
    verify_completion_bound,
    verify_path_to_state,
)
from .subgraph import Embedding, contains_directed, contains_undirected
from .textio import emit_graph, parse_graph

__version__ = "0.1.0"


__all__ = [
    "Bipartition",
    "Caps",
    "CountReport",
    "DEFAULT_CAPS",
    "Embedding",
    "Growth",
    "InvalidArgumentError",
    "MalformedOrientationError",
    "Method",
    "OrientFreeError",
    "Orientation",
    "OrientedGraph",
    "ParseError",
    "ResourceLimitError",
    "SetFamily",
    "Trace",
    "UndirectedGraph",
    "UniversalTreeSpec",
    "VertexState",
    "classify",
    "contains_directed",
    "contains_undirected",
    "count_f_free_subgraphs",
    "count_h_free_orientations",
    "count_universal_tree",
    "d_n_h",
    "emit_graph",
    "enumerate_oriented_forests",
    "ex",
    "greedy_embed_forest",
    "greedy_embed_tree",
    "is_antidirected",
    "is_forest",
    "is_one_almost_antidirected",
    "longest_directed_path",
    "matching_reversal_family",
    "n_n_f",
    "orientation_family",
    "out_star",
    "parse_graph",
    "predicted_growth",
    "realize",
    "run_state_algorithm",
    "shattered_sets",
    "star_freeness_monte_carlo",
    "underlying",
    "universal_tree",
    "universal_tree_minus",
    "verify_completion_bound",
    "verify_kozma_moran",
    "verify_path_to_state",
]
