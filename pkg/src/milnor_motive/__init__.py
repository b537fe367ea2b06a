"""Exact equivariant and motivic computations for the hyperplane section Y of a twisted Milnor hypersurface."""
from .cocycle import CocycleReport, CyclicAlgebraSpec, build_generators, fixed_point_permutation, verify_cocycle
from .cycles_monodromy import MonodromyElement, act, eta, gamma, lagrange_oracle, lift_H, lift_h
from .equivariant import (
    EquivariantClass,
    GradedRankTable,
    chow_ranks,
    graded_gkm_rank,
    is_gkm,
    middle_basis_check,
    pairing,
    pairing_number,
)
from .errors import FreenessViolation, IntegralityViolation, VerificationError
from .gkm_graph import Edge, EdgeKind, GkmGraph, Variety, Vertex, build_graph, euler_class
from .motives import (
    ChowModel,
    Correspondence,
    DecompositionReport,
    artin_idempotent,
    decomposition_report,
    manin_system,
    oracle_ring,
    orthogonality_check,
    restricted_system,
    y_model,
)
from .polyring import LinearForm, Polynomial, RationalFunction, divides, permute, rational, root
from .suite import run_suite

__all__ = [
    "act",
    "artin_idempotent",
    "build_generators",
    "build_graph",
    "chow_ranks",
    "ChowModel",
    "CocycleReport",
    "Correspondence",
    "CyclicAlgebraSpec",
    "decomposition_report",
    "DecompositionReport",
    "divides",
    "Edge",
    "EdgeKind",
    "EquivariantClass",
    "eta",
    "euler_class",
    "fixed_point_permutation",
    "FreenessViolation",
    "gamma",
    "GkmGraph",
    "graded_gkm_rank",
    "GradedRankTable",
    "IntegralityViolation",
    "is_gkm",
    "lagrange_oracle",
    "lift_H",
    "lift_h",
    "LinearForm",
    "manin_system",
    "middle_basis_check",
    "MonodromyElement",
    "oracle_ring",
    "orthogonality_check",
    "pairing",
    "pairing_number",
    "permute",
    "Polynomial",
    "rational",
    "RationalFunction",
    "restricted_system",
    "root",
    "run_suite",
    "Variety",
    "VerificationError",
    "verify_cocycle",
    "Vertex",
    "y_model",
]

__version__ = "0.1.0"
