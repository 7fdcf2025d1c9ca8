"""LiNGAM causal discovery with a deterministic data-parallel ordering path.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.
"""

from ._core import (
    BenchReport,
    Error,
    MetricsReport,
    VarModel,
    WeightedDag,
    __version__,
    amdahl_speedup,
    asymmetry_direction,
    causal_order,
    compare_adjacency,
    degree_distribution,
    diff_mutual_info,
    entropy_approx,
    estimate_var,
    fit_direct_lingam,
    fit_var_lingam,
    gen_two_level_dag,
    influence_ranking,
    profile_fit,
    residual,
    sample_lingam,
    sample_svar,
    search_causal_order,
    standardize,
    to_edges,
)

__all__ = [
    "BenchReport",
    "Error",
    "MetricsReport",
    "VarModel",
    "WeightedDag",
    "__version__",
    "amdahl_speedup",
    "asymmetry_direction",
    "causal_order",
    "compare_adjacency",
    "degree_distribution",
    "diff_mutual_info",
    "entropy_approx",
    "estimate_var",
    "fit_direct_lingam",
    "fit_var_lingam",
    "gen_two_level_dag",
    "influence_ranking",
    "profile_fit",
    "residual",
    "sample_lingam",
    "sample_svar",
    "search_causal_order",
    "standardize",
    "to_edges",
]
