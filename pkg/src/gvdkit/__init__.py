"""Geometric vertex decomposition and the invariants it controls."""

__version__ = "0.1.0"


from .polynomial import (
    Elimination,
    GrevLex,
    Lex,
    ParseError,
    Polynomial,
    PolynomialRing,
    RingMismatchError,
    UnknownVariableError,
    YBlock,
    parse_polynomial,
)
from .groebner import (
    GroebnerBasis,
    Ideal,
    contains,
    eliminate,
    ideals_equal,
    in_radical,
    intersect,
    normal_form,
    reduced_groebner,
)
from .hilbert import (
    CMStatus,
    Hilbertian,
    InvariantReport,
    hilbert_data,
    invariants_direct,
)
from .gvd import (
    Degeneracy,
    GVDSplit,
    GVDTree,
    UnmixedPolicy,
    invariants_via_recursion,
    is_c_saturated,
    is_gvd,
    nonpositivity_audit,
    one_step_split,
    verify_h_identity,
    verify_series_identity,
)
from .toric import (
    Graph,
    edge_split,
    ferrers_graph,
    ferrers_invariants,
    glue_cycle,
    grd_graph,
    toric_ideal,
)
from .simplicial import (
    SimplicialComplex,
    is_vertex_decomposable_pure,
    reg_via_vd_recursion,
    stanley_reisner_ideal,
)

__all__ = [
    "Elimination",
    "GrevLex",
    "Lex",
    "ParseError",
    "Polynomial",
    "PolynomialRing",
    "RingMismatchError",
    "UnknownVariableError",
    "YBlock",
    "parse_polynomial",
    "GroebnerBasis",
    "Ideal",
    "contains",
    "eliminate",
    "ideals_equal",
    "in_radical",
    "intersect",
    "normal_form",
    "reduced_groebner",
    "CMStatus",
    "Hilbertian",
    "InvariantReport",
    "hilbert_data",
    "invariants_direct",
    "Degeneracy",
    "GVDSplit",
    "GVDTree",
    "UnmixedPolicy",
    "invariants_via_recursion",
    "is_c_saturated",
    "is_gvd",
    "nonpositivity_audit",
    "one_step_split",
    "verify_h_identity",
    "verify_series_identity",
    "Graph",
    "edge_split",
    "ferrers_graph",
    "ferrers_invariants",
    "glue_cycle",
    "grd_graph",
    "toric_ideal",
    "SimplicialComplex",
    "is_vertex_decomposable_pure",
    "reg_via_vd_recursion",
    "stanley_reisner_ideal",
]
