"""k-clique densest subgraph search.

Frank-Wolfe solvers over explicit k-cliques (kCL) and over a succinct
clique tree (PSCTL), a path-sampling solver (SPath), and brute-force
oracles for verifying all of it at small scale.
"""

from .graph import (
    Graph,
    EdgeListParseError,
    from_edges,
    load_edge_list,
    save_edge_list,
    DegeneracyOrder,
    degeneracy_order,
    Coloring,
    greedy_color,
    induced_subgraph,
)
from .sct import (
    SctPair,
    SctForest,
    build_sct,
    filter_pairs,
    pair_count,
    hold_coverage,
    pivot_coverage,
    enumerate_pair_cliques,
    forest_cliques,
    save_forest,
    load_forest,
)
from .fw import (
    RankVector,
    PlateauPartition,
    plateau_partition,
    pair_upper_bounds,
    kcl_run,
    ibatch,
    psctl_run,
    converged,
    psctl_until_converged,
)
from .sampler import (
    ColorDag,
    build_color_dag,
    PathCounts,
    count_color_paths,
    SampleSet,
    sample_color_path,
    sample_k_cliques,
    spath_run,
    estimate_true_density,
    plan_sample_size,
)
from .extract import (
    DensityReport,
    REPORT_SCHEMA,
    rank_sort,
    prefix_clique_counts,
    best_prefix_exact,
    best_prefix_sampled,
)
from .oracle import (
    OracleLimits,
    brute_cliques,
    brute_densest,
    brute_color_paths,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "EdgeListParseError",
    "from_edges",
    "load_edge_list",
    "save_edge_list",
    "DegeneracyOrder",
    "degeneracy_order",
    "Coloring",
    "greedy_color",
    "induced_subgraph",
    "SctPair",
    "SctForest",
    "build_sct",
    "filter_pairs",
    "pair_count",
    "hold_coverage",
    "pivot_coverage",
    "enumerate_pair_cliques",
    "forest_cliques",
    "save_forest",
    "load_forest",
    "RankVector",
    "PlateauPartition",
    "plateau_partition",
    "pair_upper_bounds",
    "kcl_run",
    "ibatch",
    "psctl_run",
    "converged",
    "psctl_until_converged",
    "ColorDag",
    "build_color_dag",
    "PathCounts",
    "count_color_paths",
    "SampleSet",
    "sample_color_path",
    "sample_k_cliques",
    "spath_run",
    "estimate_true_density",
    "plan_sample_size",
    "DensityReport",
    "REPORT_SCHEMA",
    "rank_sort",
    "prefix_clique_counts",
    "best_prefix_exact",
    "best_prefix_sampled",
    "OracleLimits",
    "brute_cliques",
    "brute_densest",
    "brute_color_paths",
]
