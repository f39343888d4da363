"""
The standard R-matrix of the vector representation and index conventions.

Matrices in this package are operators on V (x) V: entry ((c, d), (a, b)) is
the coefficient of x_c (x) x_d in R(x_a (x) x_b), flattened as a * dim + b.
The index layout R^{ij}_{kl} used in braided-algebra formulas is the same
operator conjugated by the flip: R^{ij}_{kl} = operator entry ((j, i), (l, k)).
"""

import logging

from exact import LaurentScalar, PolyMatrix, session_denominator

logger = logging.getLogger(__name__)


def vector_rmatrix_star(n: int) -> PolyMatrix:
    """
    R^{ij}_{kl} = q^{delta_ij} delta_ik delta_jl + (q - q^-1) delta_il delta_jk [j > i].

    Returned in the index layout (row i*n + j, column k*n + l).

    Raises:
        ValueError: If n < 2
    """
    if n < 2:
        raise ValueError(f"Vector R-matrix needs n >= 2, got {n}")
    den = session_denominator(n)
    q = LaurentScalar.q_power(den, 1)
    one = LaurentScalar.one(den)
    gap = q - LaurentScalar.q_power(den, -1)
    entries = {}
    for i in range(n):
        for j in range(n):
            entries[(i * n + j, i * n + j)] = q if i == j else one
            if j > i:
                entries[(i * n + j, j * n + i)] = gap
    return PolyMatrix(n * n, n * n, den, entries)


def flip(matrix: PolyMatrix) -> PolyMatrix:
    """The flip P on the space whose square matrix acts on."""
    return PolyMatrix.flip(side_dimension(matrix), matrix.den)


def convert(matrix: PolyMatrix) -> PolyMatrix:
    """Switch between the operator and index layouts: P M P (an involution)."""
    p = flip(matrix)
    return p @ matrix @ p


def side_dimension(matrix: PolyMatrix) -> int:
    """
    d with matrix of size d^2 x d^2.

    Raises:
        ValueError: If the matrix is not square of perfect-square size
    """
    if not matrix.is_square():
        raise ValueError(f"R-matrix must be square, got {matrix.shape}")
    d = 1
    while d * d < matrix.nrows:
        d += 1
    if d * d != matrix.nrows:
        raise ValueError(f"R-matrix size {matrix.nrows} is not a perfect square")
    return d


def _flat(d: int, a: int, b: int) -> int:
    if not (1 <= a <= d and 1 <= b <= d):
        raise IndexError(f"Index pair ({a}, {b}) outside 1..{d}")
    return (a - 1) * d + (b - 1)


def index_entry(operator: PolyMatrix, i: int, j: int, k: int, l: int):
    """R^{ij}_{kl} of an operator matrix, 1-based."""
    d = side_dimension(operator)
    return operator[_flat(d, j, i), _flat(d, l, k)]


def pr_entry(operator: PolyMatrix, i: int, j: int, k: int, l: int):
    """(PR)^{ij}_{kl} of an operator matrix R, 1-based."""
    d = side_dimension(operator)
    return operator[_flat(d, i, j), _flat(d, l, k)]


def pr_matrix(operator: PolyMatrix) -> PolyMatrix:
    """PR in the index layout; equals operator @ P."""
    return operator @ flip(operator)


def seed_braid(n: int) -> PolyMatrix:
    """Braid operator P q^(-1/n) R on V (x) V with the star matrix as R."""
    star = vector_rmatrix_star(n)
    lam = LaurentScalar.q_power(star.den, f"-1/{n}")
    operator = convert(star).scale(lam)
    return flip(operator) @ operator
