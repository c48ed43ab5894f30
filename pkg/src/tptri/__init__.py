"""Exact total positivity for recursive (Catalan-like) triangles."""

from .arith import Q, QPoly, Scalar, parse_qpoly, parse_scalar, poly_geq_q, poly_is_nonneg
from .certify import (
    CriterionResult,
    TPReport,
    check_criterion,
    check_diagonal_dominance,
    det,
    hankel,
    is_log_concave,
    is_log_convex,
    is_pf_r,
    is_tp_r,
    minor,
    toeplitz,
    tridiag_det,
    tridiag_is_tp,
)
from .qanalogue import QCoefficientSpec, build_q_recursive, check_q_criterion, is_q_tp
from .specfile import load_spec, parse_spec
from .triangles import (
    CATALOG,
    CoefficientSpec,
    GeneralRecurrenceSpec,
    LowerTriangle,
    TriMatrix,
    build_general,
    build_recursive,
    catalan_like,
    coefficient_matrix,
    get_spec,
    verify_factorization,
)

__version__ = "0.1.0"

__all__ = [
    "CriterionResult",
    "TPReport",
    "check_criterion",
    "check_diagonal_dominance",
    "det",
    "hankel",
    "is_log_concave",
    "is_log_convex",
    "is_pf_r",
    "is_tp_r",
    "minor",
    "toeplitz",
    "tridiag_det",
    "tridiag_is_tp",
    "CATALOG",
    "CoefficientSpec",
    "GeneralRecurrenceSpec",
    "LowerTriangle",
    "TriMatrix",
    "build_general",
    "build_recursive",
    "catalan_like",
    "coefficient_matrix",
    "get_spec",
    "verify_factorization",
    "Q",
    "QPoly",
    "Scalar",
    "parse_qpoly",
    "parse_scalar",
    "poly_geq_q",
    "poly_is_nonneg",
    "QCoefficientSpec",
    "build_q_recursive",
    "check_q_criterion",
    "is_q_tp",
    "load_spec",
    "parse_spec",
]
