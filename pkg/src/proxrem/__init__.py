"""proxrem: exact proximity/remoteness invariants, extremal graph
constructions, and distance-bound verification."""

__version__ = "0.1.0"

from .bounds import (
    BoundSpec,
    CheckResult,
    all_check_ids,
    catalog,
    check_graph,
    classify,
    complete_report,
    evaluate,
)
from .constructions import (
    ConstructionError,
    ProjectivePoint,
    PuncturedPolarity,
    build_family,
    chain,
    layered_extremal,
    layered_extremal_padded,
    polarity_graph,
    projective_points,
    puncture,
)
from .fields import FieldError, FieldSpec, make_field
from .forbidden import (
    BallLemmaReport,
    C4FreeRequiredError,
    ForbiddenWitness,
    ball2_size,
    check_epp_lemma,
    find_c4,
    find_triangle,
)
from .graph import (
    Graph,
    GraphError,
    add_twins,
    basic_generator,
    disjoint_union_with_links,
    from_edge_list,
    is_connected,
    min_degree,
    sequential_sum,
)
from .graph6 import Graph6Error, emit_graph6, iter_graph6_file, parse_graph6
from .metrics import (
    DisconnectedGraphError,
    InvariantReport,
    Rational,
    bfs_distances,
    invariant_report,
    neighborhood_ring,
    partial_total_distance,
    set_default_threads,
    total_distance,
)
from .report import ReportDocument
from .search import (
    ScanSummary,
    canonical_form,
    enumerate_connected,
    oracle_apsp,
    scan,
)

__all__ = [
    "__version__",
    "BallLemmaReport",
    "BoundSpec",
    "C4FreeRequiredError",
    "CheckResult",
    "ConstructionError",
    "DisconnectedGraphError",
    "FieldError",
    "FieldSpec",
    "ForbiddenWitness",
    "Graph",
    "Graph6Error",
    "GraphError",
    "InvariantReport",
    "ProjectivePoint",
    "PuncturedPolarity",
    "Rational",
    "ReportDocument",
    "ScanSummary",
    "add_twins",
    "all_check_ids",
    "ball2_size",
    "basic_generator",
    "bfs_distances",
    "build_family",
    "canonical_form",
    "catalog",
    "chain",
    "check_epp_lemma",
    "check_graph",
    "classify",
    "complete_report",
    "disjoint_union_with_links",
    "emit_graph6",
    "enumerate_connected",
    "evaluate",
    "find_c4",
    "find_triangle",
    "from_edge_list",
    "invariant_report",
    "is_connected",
    "iter_graph6_file",
    "layered_extremal",
    "layered_extremal_padded",
    "make_field",
    "min_degree",
    "neighborhood_ring",
    "oracle_apsp",
    "parse_graph6",
    "partial_total_distance",
    "polarity_graph",
    "projective_points",
    "puncture",
    "scan",
    "sequential_sum",
    "set_default_threads",
    "total_distance",
]
