"""Exact integer checks for Gamma_1(6) monodromy, fiber-product Calabi-Yau
invariants and mod-36 intersection certificates."""

from .sl2_arith import (
    IDENTITY, S, T, ElementClass, Kind, LatticeVec, UniMat, classify, compose,
    conjugate, invert, max_finite_order, parabolic_width_class, transvection_apply,
)
from .congruence import (
    Cusp, CosetTable, coset_transversal, cusp_classes, cusp_stabilizer_generator,
    is_member, psl_index, verify_transversal,
)
from .monodromy import (
    M1, M2, M3, M6, X16_TUPLE, MonodromyTuple, beauville_search, conjugate_tuple,
    hurwitz_move, validate_tuple,
)
from .surfaces import (
    BEAUVILLE_X16, MoebiusQ, RatPoint, SurfaceDesc, euler_char,
    generic_fiber_picard_rank, moebius_apply, moebius_from_permutation,
)
from .schoen_calculus import (
    automorphism_group, build_fiber_product, conifold_count, degeneration_bound,
    hodge_of_resolution, schoen_smoothing_invariants, transition_solve_r,
)
from .certificates import (
    essentiality_certificate, intersection_pairing, lower_left, nodal_obstruction,
    residue_invariance_check,
)

__all__ = [
    "IDENTITY", "S", "T", "ElementClass", "Kind", "LatticeVec", "UniMat", "classify",
    "compose", "conjugate", "invert", "max_finite_order", "parabolic_width_class",
    "transvection_apply", "Cusp", "CosetTable", "coset_transversal", "cusp_classes",
    "cusp_stabilizer_generator", "is_member", "psl_index", "verify_transversal", "M1",
    "M2", "M3", "M6", "X16_TUPLE", "MonodromyTuple", "beauville_search",
    "conjugate_tuple", "hurwitz_move", "validate_tuple", "BEAUVILLE_X16", "MoebiusQ",
    "RatPoint", "SurfaceDesc", "euler_char", "generic_fiber_picard_rank",
    "moebius_apply", "moebius_from_permutation", "automorphism_group",
    "build_fiber_product", "conifold_count", "degeneration_bound",
    "hodge_of_resolution", "schoen_smoothing_invariants", "transition_solve_r",
    "essentiality_certificate", "intersection_pairing", "lower_left",
    "nodal_obstruction", "residue_invariance_check",
]

__version__ = "0.1.0"
