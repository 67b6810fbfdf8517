"""udgraph: construct, verify, audit, and count unit-distance graph realizations."""

from .audit import (
    AuditReport,
    edge_sum,
    faithful_dim_audit,
    graph_id,
    hsystem_of,
    k_lower_bound,
    lemedge2_guarantee,
    lemedge_bound,
)
from .census import (
    CensusReport,
    count_distance,
    count_faithful,
    linear_forest_oracle,
    ramsey_exact,
    ramsey_fd_lower,
    zero_pattern_bound,
)
from .embed import (
    Embedding,
    FlatnessBudget,
    HSystem,
    PreconditionError,
    RealizationError,
    embed_bipartite_faithful,
    embed_colorable,
    embed_singleton_coloring,
    embedding_from_json,
    growth_dimension,
    realize_hsystem,
)
from .geometry import (
    affine_rank,
    complementary_sphere,
    minimal_sphere,
    pairwise_distances,
)
from .graphs import (
    Graph,
    bipartition_of,
    exact_chromatic_small,
    exact_coloring,
    girth,
    graph_from_json,
    graph_to_json,
    greedy_coloring,
    make_complete,
    make_complete_multipartite,
    make_kdoubleprime,
    make_kprime,
    make_petersen,
    make_remark_graph,
)
from .solver import (
    SolveResult,
    SolverConfig,
    gradient,
    gradient_check,
    objective,
    solve_distance,
    solve_faithful,
)
from .verify import Report, ToleranceCliffWarning, induced_udg, verify

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "CensusReport",
    "Embedding",
    "FlatnessBudget",
    "Graph",
    "HSystem",
    "PreconditionError",
    "RealizationError",
    "Report",
    "SolveResult",
    "SolverConfig",
    "ToleranceCliffWarning",
    "affine_rank",
    "bipartition_of",
    "complementary_sphere",
    "count_distance",
    "count_faithful",
    "edge_sum",
    "embed_bipartite_faithful",
    "embed_colorable",
    "embed_singleton_coloring",
    "embedding_from_json",
    "exact_chromatic_small",
    "exact_coloring",
    "faithful_dim_audit",
    "girth",
    "gradient",
    "gradient_check",
    "graph_from_json",
    "graph_id",
    "graph_to_json",
    "greedy_coloring",
    "growth_dimension",
    "hsystem_of",
    "induced_udg",
    "k_lower_bound",
    "lemedge2_guarantee",
    "lemedge_bound",
    "linear_forest_oracle",
    "make_complete",
    "make_complete_multipartite",
    "make_kdoubleprime",
    "make_kprime",
    "make_petersen",
    "make_remark_graph",
    "minimal_sphere",
    "objective",
    "pairwise_distances",
    "ramsey_exact",
    "ramsey_fd_lower",
    "realize_hsystem",
    "solve_distance",
    "solve_faithful",
    "verify",
    "zero_pattern_bound",
]
