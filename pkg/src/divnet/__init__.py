"""Dual-path analytics for the divisibility network on 1..N.

Two independent computation routes for every measure: closed-form divisor
arithmetic (divnet.analytic) and brute-force recomputation from explicit
adjacency (divnet.graph_oracle). They are meant to agree exactly; the
`divnet verify` command and the test suite hold them to that.
"""

__version__ = "1.0.0"

from .analysis import (
    BandSummary,
    CensusTable,
    ScalingFit,
    SymmetryStats,
    band_decomposition,
    consecutive_divisor_census,
    delta_symmetry_stats,
    scaling_fit,
    stretch_similarity,
)
from .analytic import (
    ClusteringParts,
    clustering,
    clustering_profile,
    degree,
    degree_profile,
    delta_clustering,
    delta_clustering_in_band,
    delta_divisor,
    delta_zero_predicate,
    link_density,
    link_density_from_summatory,
    prime_clustering,
)
from .backend import backend_name
from .graph_oracle import (
    DivisibilityGraph,
    betweenness_brandes,
    betweenness_matrix,
    betweenness_matrix_profile,
    build_graph,
    clustering_oracle,
    clustering_profile_oracle,
    common_neighbor_count,
    degree_oracle,
    degree_profile_oracle,
    link_density_oracle,
    write_edge_list,
)
from .numtheory import (
    FactoredInteger,
    SieveTables,
    build_sieve,
    divisor_summatory,
    factorize,
    floor_div,
    list_divisors,
)

__all__ = [
    "BandSummary",
    "CensusTable",
    "ClusteringParts",
    "DivisibilityGraph",
    "FactoredInteger",
    "ScalingFit",
    "SieveTables",
    "SymmetryStats",
    "__version__",
    "backend_name",
    "band_decomposition",
    "betweenness_brandes",
    "betweenness_matrix",
    "betweenness_matrix_profile",
    "build_graph",
    "build_sieve",
    "clustering",
    "clustering_oracle",
    "clustering_profile",
    "clustering_profile_oracle",
    "common_neighbor_count",
    "consecutive_divisor_census",
    "degree",
    "degree_oracle",
    "degree_profile",
    "degree_profile_oracle",
    "delta_clustering",
    "delta_clustering_in_band",
    "delta_divisor",
    "delta_symmetry_stats",
    "delta_zero_predicate",
    "divisor_summatory",
    "factorize",
    "floor_div",
    "link_density",
    "link_density_from_summatory",
    "link_density_oracle",
    "list_divisors",
    "prime_clustering",
    "scaling_fit",
    "stretch_similarity",
    "write_edge_list",
]
