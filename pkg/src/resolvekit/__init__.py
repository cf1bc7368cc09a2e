"""resolvekit: layered cube/cycle graph families, the three resolving-set
verifiers, and exact minimization with independent cross-check oracles."""

from .graphs import (
    DIMACS,
    EDGE_LIST,
    DisconnectedGraphError,
    DistanceMatrix,
    FormatError,
    Graph,
    apsp,
    bfs_distances,
    is_connected,
    make_graph,
    read_graph,
    write_graph,
)
from .generators import (
    VertexLabel,
    build_ccc,
    build_cube_unit,
    build_cycle,
    build_lcg,
    ccc_order,
    id_of,
    label_of,
    last_layer_units,
    lcg_order,
    read_labels_tsv,
    with_labels,
    write_labels_tsv,
)
from .resolving import (
    MmdGraph,
    doubly_resolves,
    is_doubly_resolving,
    is_resolving,
    is_strong_resolving,
    mmd_graph,
    mmd_pairs,
    representation,
    strongly_resolves,
    twin_classes,
    twin_lower_bound,
)
from .solvers import (
    Budget,
    BudgetExceededError,
    SearchStats,
    SolveResult,
    StrongReductionError,
    min_vertex_cover,
    solve_min_doubly,
    solve_min_resolving,
    solve_min_strong_direct,
    solve_min_strong_vc,
)
from .witnesses import (
    TheoremClaim,
    audit_claim,
    ccc_formula,
    ccc_witness,
    lcg_formula,
    lcg_witness,
    reproduce,
)

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "BudgetExceededError",
    "DIMACS",
    "DisconnectedGraphError",
    "DistanceMatrix",
    "EDGE_LIST",
    "FormatError",
    "Graph",
    "MmdGraph",
    "SearchStats",
    "SolveResult",
    "StrongReductionError",
    "TheoremClaim",
    "VertexLabel",
    "apsp",
    "audit_claim",
    "bfs_distances",
    "build_ccc",
    "build_cube_unit",
    "build_cycle",
    "build_lcg",
    "ccc_formula",
    "ccc_order",
    "ccc_witness",
    "doubly_resolves",
    "id_of",
    "is_connected",
    "is_doubly_resolving",
    "is_resolving",
    "is_strong_resolving",
    "label_of",
    "last_layer_units",
    "lcg_formula",
    "lcg_order",
    "lcg_witness",
    "make_graph",
    "min_vertex_cover",
    "mmd_graph",
    "mmd_pairs",
    "read_graph",
    "read_labels_tsv",
    "representation",
    "reproduce",
    "solve_min_doubly",
    "solve_min_resolving",
    "solve_min_strong_direct",
    "solve_min_strong_vc",
    "strongly_resolves",
    "twin_classes",
    "twin_lower_bound",
    "with_labels",
    "write_graph",
    "write_labels_tsv",
]
