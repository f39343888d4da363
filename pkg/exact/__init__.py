"""
Exact arithmetic package: Laurent scalars, rational functions, sparse matrices
and fraction-free linear algebra.
"""

from .laurent import (
    InexactDivisionError,
    LaurentScalar,
    SessionMismatchError,
    format_q_exponent,
    laurent_gcd,
    q_of,
    session_denominator,
)
from .ratfn import RatScalar, as_scalar, scalar_arith
from .matrix import DimensionMismatchError, PolyMatrix, kron, mat_mul, matrix_polynomial
from .linalg import (
    SignedMonomial,
    UnsupportedSpectrumError,
    factor_signed_monomials,
    in_span,
    minpoly_probe,
    nullspace,
    poly_from_roots,
    qbinomial,
    qfactorial,
    qint,
    rank,
)

__all__ = [
    "InexactDivisionError",
    "LaurentScalar",
    "SessionMismatchError",
    "format_q_exponent",
    "laurent_gcd",
    "q_of",
    "session_denominator",
    "RatScalar",
    "as_scalar",
    "scalar_arith",
    "DimensionMismatchError",
    "PolyMatrix",
    "kron",
    "mat_mul",
    "matrix_polynomial",
    "SignedMonomial",
    "UnsupportedSpectrumError",
    "factor_signed_monomials",
    "in_span",
    "minpoly_probe",
    "nullspace",
    "poly_from_roots",
    "qbinomial",
    "qfactorial",
    "qint",
    "rank",
]
