"""Increasing paths in edge-ordered graphs: bounds on the altitude f(G).

An edge-ordering ranks the edges 1..m; its value is the length of the
longest path along which ranks strictly increase, and the altitude f(G) is
the minimum value over all orderings.  The package computes f exactly for
tiny graphs, brackets it with certified lower bounds (degree floor, density
criterion) and constructive upper bounds (proper edge colorings, annealing),
and evaluates the closed-form brackets for complete graphs, hypercubes, and
random graphs.
"""

from .adversary import (
    AnnealSchedule,
    SearchTrace,
    UpperBoundReport,
    local_search_min_psi,
    upper_bound_report,
)
from .bounds import (
    BoundReport,
    GnpUnionBound,
    gnp_k,
    gnp_threshold_p,
    gnp_union_bound_log,
    graham_kleitman,
    hypercube_bounds,
    hypercube_k,
    sweep_inequality_6,
    verify_inequality_6,
)
from .density import (
    DensityProfile,
    ZetaResult,
    density_profile,
    hypercube_zeta_bound_check,
    rodl_criterion,
    zeta_exact,
    zeta_greedy,
)
from .exactf import AltitudeResult, SandwichReport, edge_orbits, exact_f, f_bounds_sandwich
from .graphs import (
    DegreeStats,
    DuplicateEdgeError,
    Graph,
    GraphFormatError,
    LoopError,
    MalformedLineError,
    VertexRangeError,
    degree_stats,
    hypercube_dimension,
    is_complete,
    make_complete,
    make_cycle,
    make_hypercube,
    make_matching,
    make_path,
    make_star,
    parse_graph,
    sample_gnp,
    serialize_graph,
)
from .orderings import (
    EdgeColoring,
    EdgeOrdering,
    OrderingFormatError,
    coloring_ordering,
    greedy_edge_coloring,
    hypercube_dimension_coloring,
    identity_ordering,
    parse_ordering,
    proper_violation,
    random_ordering,
    serialize_ordering,
)
from .paths import (
    PathResult,
    WitnessError,
    longest_increasing_path,
    longest_increasing_trail,
    verify_witness,
)
from .pedestrian import (
    CountingReport,
    CoverageReport,
    PedestrianTranscript,
    TranscriptError,
    check_invariants,
    run_pedestrian,
    sqrt_degree_floor,
    verify_counting,
    verify_coverage,
)

__version__ = "0.1.0"

__all__ = [
    "AltitudeResult",
    "AnnealSchedule",
    "BoundReport",
    "CountingReport",
    "CoverageReport",
    "DegreeStats",
    "DensityProfile",
    "DuplicateEdgeError",
    "EdgeColoring",
    "EdgeOrdering",
    "GnpUnionBound",
    "Graph",
    "GraphFormatError",
    "LoopError",
    "MalformedLineError",
    "OrderingFormatError",
    "PathResult",
    "PedestrianTranscript",
    "SandwichReport",
    "SearchTrace",
    "TranscriptError",
    "UpperBoundReport",
    "VertexRangeError",
    "WitnessError",
    "ZetaResult",
    "check_invariants",
    "coloring_ordering",
    "degree_stats",
    "density_profile",
    "edge_orbits",
    "exact_f",
    "f_bounds_sandwich",
    "gnp_k",
    "gnp_threshold_p",
    "gnp_union_bound_log",
    "graham_kleitman",
    "greedy_edge_coloring",
    "hypercube_bounds",
    "hypercube_dimension",
    "hypercube_dimension_coloring",
    "hypercube_k",
    "hypercube_zeta_bound_check",
    "identity_ordering",
    "is_complete",
    "local_search_min_psi",
    "longest_increasing_path",
    "longest_increasing_trail",
    "make_complete",
    "make_cycle",
    "make_hypercube",
    "make_matching",
    "make_path",
    "make_star",
    "parse_graph",
    "parse_ordering",
    "proper_violation",
    "random_ordering",
    "rodl_criterion",
    "run_pedestrian",
    "sample_gnp",
    "serialize_graph",
    "serialize_ordering",
    "sqrt_degree_floor",
    "upper_bound_report",
    "verify_counting",
    "verify_coverage",
    "verify_inequality_6",
    "verify_witness",
    "sweep_inequality_6",
    "zeta_exact",
    "zeta_greedy",
]
