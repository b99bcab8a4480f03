"""Exact spanning-tree enumeration for threshold, special 2-threshold, and
Ferrers graphs: recognition with certificates, closed-form counts, exact
linear algebra over the integers, weighted polynomial enumerators, and a
brute-force oracle cross-checking everything."""

from .counting import (
    DEFAULT_ORACLE_LIMIT,
    auto_count,
    bipartite_count,
    build_perturbation,
    complete_count,
    ferrers_count,
    matrix_tree_count,
    multipartite_count,
    oracle_count,
    perturbation_count,
    spanning_trees,
    special_2_threshold_count,
    threshold_count,
)
from .errors import (
    CapabilityExceededError,
    EdgeListParseError,
    ExactnessError,
    OrderInconsistencyError,
    SpantreeError,
    TriangularityError,
)
from .graph import (
    Graph,
    PartitionShape,
    complete,
    complete_multipartite,
    conjugate,
    ferrers_graph,
    format_edge_list,
    induced_subgraph,
    is_connected,
    is_independent,
    parse_edge_list,
)
from .linalg import (
    ExactMatrix,
    determinant,
    fraction_free_determinant,
    is_upper_triangular,
    laplacian,
    minor_determinant,
    rank_one_update,
)
from .poly import MultiPoly
from .recognition import (
    DEFAULT_SEARCH_LIMIT,
    FAMILY_FERRERS,
    FAMILY_SPECIAL_2_THRESHOLD,
    FAMILY_THRESHOLD,
    CanonicalOrder,
    ConstructionOrder,
    FerrersStructure,
    ForbiddenWitness,
    NestingReport,
    canonical_order,
    ferrers_structure,
    forbidden_witness,
    nesting_report,
    special_2_threshold_order,
    threshold_order,
    u_threshold_obstruction,
    u_threshold_order,
)
from .weighted import (
    PolyMatrix,
    weighted_build_perturbation,
    weighted_cayley_prufer,
    weighted_count_ferrers,
    weighted_count_special_2threshold,
    weighted_count_threshold,
    weighted_degree,
    weighted_laplacian,
    weighted_oracle,
    weighted_perturbation_count,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalOrder",
    "CapabilityExceededError",
    "ConstructionOrder",
    "DEFAULT_ORACLE_LIMIT",
    "DEFAULT_SEARCH_LIMIT",
    "EdgeListParseError",
    "ExactMatrix",
    "ExactnessError",
    "FAMILY_FERRERS",
    "FAMILY_SPECIAL_2_THRESHOLD",
    "FAMILY_THRESHOLD",
    "FerrersStructure",
    "ForbiddenWitness",
    "Graph",
    "MultiPoly",
    "NestingReport",
    "OrderInconsistencyError",
    "PartitionShape",
    "PolyMatrix",
    "SpantreeError",
    "TriangularityError",
    "auto_count",
    "bipartite_count",
    "build_perturbation",
    "canonical_order",
    "complete",
    "complete_count",
    "complete_multipartite",
    "conjugate",
    "determinant",
    "ferrers_count",
    "ferrers_graph",
    "ferrers_structure",
    "forbidden_witness",
    "format_edge_list",
    "fraction_free_determinant",
    "induced_subgraph",
    "is_connected",
    "is_independent",
    "is_upper_triangular",
    "laplacian",
    "matrix_tree_count",
    "minor_determinant",
    "multipartite_count",
    "nesting_report",
    "oracle_count",
    "parse_edge_list",
    "perturbation_count",
    "rank_one_update",
    "spanning_trees",
    "special_2_threshold_count",
    "special_2_threshold_order",
    "threshold_count",
    "threshold_order",
    "u_threshold_obstruction",
    "u_threshold_order",
    "weighted_build_perturbation",
    "weighted_cayley_prufer",
    "weighted_count_ferrers",
    "weighted_count_special_2threshold",
    "weighted_count_threshold",
    "weighted_degree",
    "weighted_laplacian",
    "weighted_oracle",
    "weighted_perturbation_count",
]
