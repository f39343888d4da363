"""
Fraction-free linear algebra over the Laurent ring.

Elimination is Bareiss-style with exact division by the previous pivot, so
every intermediate entry stays a Laurent polynomial. Pivots are chosen by a
fixed scan (columns left to right, first nonzero row below the current rank)
so results are reproducible.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .laurent import InexactDivisionError, LaurentScalar, format_q_exponent, laurent_gcd, poly_content
from .matrix import DimensionMismatchError, PolyMatrix, matrix_polynomial, matrix_power_apply
from .ratfn import RatScalar

logger = logging.getLogger(__name__)

Vector = List[LaurentScalar]


class UnsupportedSpectrumError(ValueError):
    """Raised when a polynomial does not split into roots of the form +-q^s."""


@dataclass(frozen=True)
class SignedMonomial:
    """A root sign * q^exponent."""

    sign: int
    exponent: Fraction

    def to_scalar(self, den: int) -> LaurentScalar:
        return LaurentScalar.q_power(den, self.exponent, self.sign)

    def __str__(self) -> str:
        body = format_q_exponent(self.exponent)
        return f"-{body}" if self.sign < 0 else body

    def to_json(self) -> dict:
        return {"sign": self.sign, "exp": f"{self.exponent.numerator}/{self.exponent.denominator}"}


def _as_laurent_rows(matrix: PolyMatrix) -> List[Vector]:
    rows = matrix.to_rows()
    for i, row in enumerate(rows):
        dens = [v.den for v in row if isinstance(v, RatScalar)]
        if not dens:
            continue
        common = LaurentScalar.one(matrix.den)
        for d in dens:
            common = common * d
        rows[i] = [(v * common).to_laurent() if isinstance(v, RatScalar) else v * common for v in row]
    return rows


def echelon(rows: List[Vector], ncols: int, den: int) -> Tuple[List[Vector], List[int]]:
    """
    Fraction-free row echelon form.

    Args:
        rows: Dense rows of Laurent scalars (modified in place)
        ncols: Number of columns
        den: Session denominator

    Returns:
        Tuple of the echelon rows and the pivot columns
    """
    zero = LaurentScalar.zero(den)
    prev = LaurentScalar.one(den)
    nrows = len(rows)
    rank = 0
    pivots: List[int] = []
    for col in range(ncols):
        if rank == nrows:
            break
        pivot_row = next((i for i in range(rank, nrows) if not rows[i][col].is_zero), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        top = rows[rank]
        pivot = top[col]
        for i in range(rank + 1, nrows):
            row = rows[i]
            lead = row[col]
            for j in range(col + 1, ncols):
                value = pivot * row[j]
                if not lead.is_zero and not top[j].is_zero:
                    value = value - lead * top[j]
                row[j] = value.exact_div(prev) if not value.is_zero else zero
            row[col] = zero
        prev = pivot
        pivots.append(col)
        rank += 1
    return rows, pivots


def rank(matrix: PolyMatrix) -> int:
    """Exact rank."""
    _, pivots = echelon(_as_laurent_rows(matrix), matrix.ncols, matrix.den)
    return len(pivots)


def primitive(vector: Sequence[LaurentScalar]) -> Vector:
    """
    Normalize a vector up to units and rational scalars.

    The result has polynomial gcd 1, lowest exponent 0 across entries,
    integer coefficients with content 1, and the first nonzero entry has a
    positive leading coefficient.
    """
    nonzero = [v for v in vector if not v.is_zero]
    if not nonzero:
        return list(vector)
    g = nonzero[0]
    for v in nonzero[1:]:
        if g.is_constant():
            break
        g = laurent_gcd(g, v)
    if not g.is_monomial():
        vector = [v.exact_div(g) for v in vector]
        nonzero = [v for v in vector if not v.is_zero]
    shift = -min(v.min_exp for v in nonzero)
    factor = 1 / poly_content(nonzero)
    if nonzero[0].leading_coeff() < 0:
        factor = -factor
    return [v.shift(shift).scale(factor) for v in vector]


def nullspace(matrix: PolyMatrix, side: str = "right") -> List[Vector]:
    """
    Basis of the exact kernel.

    Args:
        matrix: Input matrix
        side: "right" for M x = 0, "left" for x^T M = 0

    Returns:
        List[Vector]: Denominator-cleared, content-primitive basis vectors,
        one per free column in ascending order; empty for a trivial kernel
    """
    if side not in ("right", "left"):
        raise ValueError(f"Unknown kernel side '{side}'. Available: right, left")
    if side == "left":
        matrix = matrix.transpose()
    ncols = matrix.ncols
    den = matrix.den
    rows, pivots = echelon(_as_laurent_rows(matrix), ncols, den)
    zero = LaurentScalar.zero(den)
    one = LaurentScalar.one(den)
    pivot_set = set(pivots)
    basis: List[Vector] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        x = [zero] * ncols
        x[free] = one
        for k in reversed(range(len(pivots))):
            col = pivots[k]
            row = rows[k]
            acc = zero
            for j in range(col + 1, ncols):
                if not row[j].is_zero and not x[j].is_zero:
                    acc = acc + row[j] * x[j]
            if acc.is_zero:
                continue
            try:
                x[col] = -acc.exact_div(row[col])
            except InexactDivisionError:
                x = [v * row[col] for v in x]
                x[col] = -acc
        basis.append(primitive(x))
    logger.debug("Kernel (%s) of %dx%d matrix has dimension %d", side, matrix.nrows, ncols, len(basis))
    return basis


def in_span(rows: Sequence[Sequence[LaurentScalar]], target: Sequence[LaurentScalar], den: int) -> bool:
    """Whether target is a linear combination (over the fraction field) of rows."""
    if not rows:
        return all(v.is_zero for v in target)
    ncols = len(target)
    _, base = echelon([list(r) for r in rows], ncols, den)
    _, extended = echelon([list(r) for r in rows] + [list(target)], ncols, den)
    return len(base) == len(extended)


# ----------------------------------------------------------------------
# polynomials with scalar coefficients (ascending order)


def poly_mul(a: Sequence, b: Sequence) -> list:
    zero = a[0] * 0
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero:
            continue
        for j, y in enumerate(b):
            if not y.is_zero:
                out[i + j] = out[i + j] + x * y
    return out


def annihilator(matrix: PolyMatrix, vector) -> Vector:
    """
    Minimal polynomial of M restricted to the Krylov space of a vector.

    Returns ascending Laurent coefficients, content-primitive.
    """
    krylov = [dict(vector)]
    while True:
        candidate = PolyMatrix.from_columns(krylov, matrix.nrows, matrix.den)
        kernel = nullspace(candidate, "right")
        if kernel:
            coeffs = kernel[0]
            while coeffs and coeffs[-1].is_zero:
                coeffs = coeffs[:-1]
            return coeffs
        if len(krylov) > matrix.nrows:
            raise ArithmeticError("Krylov sequence failed to become dependent")
        krylov.append(matrix.apply(krylov[-1]))


def minpoly_probe(matrix: PolyMatrix) -> List[RatScalar]:
    """
    Minimal polynomial by probing standard basis vectors.

    The running polynomial p is the lcm of the annihilators seen so far; a
    probe e contributes the annihilator of p(M) e. The result is checked by
    substituting M and returned monic with ascending coefficients.

    Raises:
        DimensionMismatchError: If the matrix is not square
    """
    if not matrix.is_square():
        raise DimensionMismatchError(f"Minimal polynomial of non-square {matrix.shape} matrix")
    den = matrix.den
    poly: Vector = [LaurentScalar.one(den)]
    one = LaurentScalar.one(den)
    for index in range(matrix.nrows):
        residue = matrix_power_apply(matrix, poly, {index: one})
        if not residue:
            continue
        factor = annihilator(matrix, residue)
        poly = primitive(poly_mul(poly, factor))
        logger.debug("Probe %d raised minimal polynomial degree to %d", index, len(poly) - 1)
        if len(poly) - 1 == matrix.nrows:
            break
    if not matrix_polynomial(matrix, poly).is_zero:
        raise ArithmeticError("Probed polynomial does not annihilate the matrix")
    lead = poly[-1]
    return [RatScalar(c) / lead for c in poly]


def evaluate(coeffs: Sequence, x):
    acc = coeffs[-1] * 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def factor_signed_monomials(coeffs: Sequence) -> List[SignedMonomial]:
    """
    Split a monic polynomial into linear factors (x - sign * q^s).

    Args:
        coeffs: Ascending coefficients (RatScalar or LaurentScalar)

    Returns:
        Roots sorted by descending exponent, then sign; with multiplicity

    Raises:
        UnsupportedSpectrumError: If some factor is not of that form
    """
    try:
        poly = [c.to_laurent() for c in coeffs]
    except ValueError as e:
        raise UnsupportedSpectrumError(f"Polynomial has non-Laurent coefficients: {e}") from e
    den = poly[0].den
    bound = max((abs(e) for c in poly for e in c.terms), default=0)
    roots: List[SignedMonomial] = []
    for exp in range(bound, -bound - 1, -1):
        for sign in (1, -1):
            root = LaurentScalar.monomial(den, exp, sign)
            while len(poly) > 1 and evaluate(poly, root).is_zero:
                poly = _synthetic_division(poly, root)
                roots.append(SignedMonomial(sign, Fraction(exp, den)))
    if len(poly) > 1:
        raise UnsupportedSpectrumError(
            f"Polynomial does not split into signed q-monomial roots; leftover degree {len(poly) - 1}"
        )
    return roots


def _synthetic_division(poly: Vector, root: LaurentScalar) -> Vector:
    out = [poly[-1]]
    for c in reversed(poly[1:-1]):
        out.append(c + out[-1] * root)
    out.reverse()
    return out


def poly_from_roots(roots: Sequence[SignedMonomial], den: int) -> Vector:
    poly: Vector = [LaurentScalar.one(den)]
    for root in roots:
        poly = poly_mul(poly, [-root.to_scalar(den), LaurentScalar.one(den)])
    return poly


# ----------------------------------------------------------------------
# quantum integers


def qint(m: int, t: LaurentScalar) -> LaurentScalar:
    """Symmetric quantum integer [m]_t = (t^m - t^-m)/(t - t^-1)."""
    if m == 0:
        return LaurentScalar.zero(t.den)
    return (t ** m - t ** (-m)).exact_div(t - t ** (-1))


def qbinomial(m: int, k: int, t: LaurentScalar) -> LaurentScalar:
    """Symmetric quantum binomial coefficient [m choose k]_t."""
    if k < 0 or k > m:
        return LaurentScalar.zero(t.den)
    num = LaurentScalar.one(t.den)
    denom = LaurentScalar.one(t.den)
    for i in range(1, k + 1):
        num = num * qint(m - k + i, t)
        denom = denom * qint(i, t)
    return num.exact_div(denom)


def qfactorial(m: int, t: LaurentScalar) -> LaurentScalar:
    result = LaurentScalar.one(t.den)
    for i in range(1, m + 1):
        result = result * qint(i, t)
    return result

