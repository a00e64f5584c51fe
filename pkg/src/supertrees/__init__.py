"""Matching polynomials, adjacency-tensor spectra and extremal orderings of
r-uniform linear hypergraphs (supertrees)."""

from .errors import (
    BadParamsError,
    BudgetExceededError,
    DanglingVertexError,
    DiameterUndefinedError,
    DisconnectedError,
    NoPositiveRootError,
    NoSuchEdgeError,
    NoSuchVertexError,
    NonLinearError,
    NonLinearResultError,
    NonUniformEdgeError,
    NotAcyclicError,
    NotConvergedError,
    OrderMismatchError,
    ParseError,
    PendentEdgeError,
    PivotNotInEdgeError,
    PreconditionViolatedError,
    RankMismatchError,
    RankNotTwoError,
    RankTooSmallError,
    SupertreeError,
    TargetInsideEdgeError,
    TooLargeError,
    ValidationError,
)
from .families import (
    AnchoredHypergraph,
    FamilySpec,
    attach_pendent_path,
    bistarred_path,
    core_pendent_path,
    core_starred_path,
    graft_paths_at_distance,
    graft_paths_at_edge,
    graft_paths_at_vertex,
    hyperstar,
    loose_path,
    path_edge_attach,
    path_vertex_attach,
    starred_path,
    tree_power,
    vertex_pendent_path,
)
from .hypergraph import (
    Hypergraph,
    StructureReport,
    VertexRole,
    canonical_code,
    coalesce,
    diameter,
    disjoint_union,
    edge_release,
    empty_hypergraph,
    from_edges,
    from_json_dict,
    is_acyclic,
    is_connected,
    is_supertree,
    move_edges,
    power,
    relabel,
    structure,
    validate,
)
from .matching import (
    MatchingPolynomial,
    count_matchings_bruteforce,
    derivative_identity_residual,
    matching_number,
    matching_number_bruteforce,
    matching_polynomial,
    poly_union,
    power_transform,
    vertex_deletion_residual,
)
from .ordering import (
    DifferencePolynomial,
    OrderingVerdict,
    Relation,
    compare,
    enumerate_supertrees,
    enumerate_with_diameter,
)
from .spectral import (
    PowerRelationReport,
    SpectralResult,
    dual_method_gap,
    rho_from_matching_poly,
    rho_power_iteration,
    spectral_radius,
    verify_power_relation,
)
from .theorems import (
    CheckResult,
    RankedEntry,
    RankingReport,
    check_edge_moving,
    check_edge_release,
    check_graft_at_distance,
    check_graft_at_edge_pair,
    check_graft_at_vertex,
    verify_minima,
    verify_ranking_diameter,
)

__version__ = "0.1.0"
