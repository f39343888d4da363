"""
Tests for exact Laurent/rational arithmetic, sparse matrices and linear algebra.
"""

import random
from fractions import Fraction

import pytest

from exact import (
    DimensionMismatchError,
    InexactDivisionError,
    LaurentScalar,
    PolyMatrix,
    RatScalar,
    SessionMismatchError,
    SignedMonomial,
    UnsupportedSpectrumError,
    factor_signed_monomials,
    format_q_exponent,
    in_span,
    kron,
    laurent_gcd,
    minpoly_probe,
    nullspace,
    poly_from_roots,
    qbinomial,
    qint,
    rank,
    scalar_arith,
)

DEN = 6


def q(exp, coeff=1):
    return LaurentScalar.q_power(DEN, exp, coeff)


def one():
    return LaurentScalar.one(DEN)


def random_scalar(rng):
    return LaurentScalar(DEN, {rng.randint(-6, 6): rng.randint(-3, 3) for _ in range(3)})


def test_ring_axioms_seeded():
    """Commutativity, associativity and distributivity on random scalars."""
    rng = random.Random(20240611)
    for _ in range(50):
        a, b, c = random_scalar(rng), random_scalar(rng), random_scalar(rng)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == 0


def test_q_power_and_lattice():
    assert q(1) * q(-1) == 1
    assert q("1/3") * q("2/3") == q(1)
    assert q("-4/3").q_exponent() == Fraction(-4, 3)
    with pytest.raises(ValueError):
        LaurentScalar.q_power(DEN, Fraction(1, 4))


def test_session_mismatch():
    with pytest.raises(SessionMismatchError):
        LaurentScalar.one(4) + LaurentScalar.one(6)


def test_exact_division():
    quantum_three = q(2) + one() + q(-2)
    product = quantum_three * (q(1) - q(-1))
    assert product.exact_div(q(1) - q(-1)) == quantum_three
    with pytest.raises(InexactDivisionError):
        one().exact_div(q(1) + one())


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        RatScalar(one(), LaurentScalar.zero(DEN))
    with pytest.raises(ZeroDivisionError):
        one() / 0


def test_rational_canonical_form():
    """(q^2 - q^-2)/(q - q^-1) reduces to the Laurent polynomial q + q^-1."""
    value = RatScalar(q(2) - q(-2), q(1) - q(-1))
    assert value.is_laurent()
    assert value.to_laurent() == q(1) + q(-1)
    ratio = scalar_arith(one(), q(1) + one(), "div")
    assert not ratio.is_laurent()
    assert ratio * (q(1) + one()) == RatScalar(one())
    with pytest.raises(ValueError):
        scalar_arith(one(), one(), "pow")


def test_laurent_gcd():
    a = (q(1) + one()) * (q(2) + one())
    b = (q(1) + one()) * (q(1) - one())
    assert laurent_gcd(a, b) == q(1) + one()
    assert laurent_gcd(q(3), a) == one()


def test_format_q_exponent():
    assert format_q_exponent(Fraction(0)) == "1"
    assert format_q_exponent(Fraction(1)) == "q"
    assert format_q_exponent(Fraction(2)) == "q^2"
    assert format_q_exponent(Fraction(-4, 3)) == "q^(-4/3)"


def test_json_round_trip_scalar():
    value = q("-4/3", Fraction(5, 2)) + one()
    assert LaurentScalar.from_json(value.to_json()) == value
    ratio = RatScalar(one(), q(1) + one())
    assert RatScalar.from_json(ratio.to_json()) == ratio


def test_matrix_product_and_kron():
    a = PolyMatrix.from_rows([[one(), q(1)], [0, one()]], DEN)
    b = PolyMatrix.from_rows([[one(), -q(1)], [0, one()]], DEN)
    assert a @ b == PolyMatrix.identity(2, DEN)
    k = kron(a, PolyMatrix.identity(2, DEN))
    assert k.shape == (4, 4)
    assert k[0, 2] == q(1)
    assert k[1, 3] == q(1)
    with pytest.raises(DimensionMismatchError):
        a @ PolyMatrix.identity(3, DEN)


def test_flip_is_involution():
    p = PolyMatrix.flip(3, DEN)
    assert p @ p == PolyMatrix.identity(9, DEN)
    assert p[1 * 3 + 0, 0 * 3 + 1] == 1


def test_first_difference():
    a = PolyMatrix.identity(2, DEN)
    b = PolyMatrix.diagonal([one(), q(1)], DEN)
    assert a.first_difference(a) is None
    row, col, left, right = a.first_difference(b)
    assert (row, col) == (1, 1)
    assert left == 1 and right == q(1)


def test_rank_and_nullspace():
    """Rows (1, q) and (q^-1, 1) are proportional; the kernel is spanned by (q, -1)."""
    m = PolyMatrix.from_rows([[one(), q(1)], [q(-1), one()]], DEN)
    assert rank(m) == 1
    kernel = nullspace(m, "right")
    assert len(kernel) == 1
    x = kernel[0]
    assert m.apply({i: v for i, v in enumerate(x) if not v.is_zero}) == {}
    left = nullspace(m, "left")
    assert len(left) == 1
    with pytest.raises(ValueError):
        nullspace(m, "middle")


def test_nullspace_trivial():
    assert nullspace(PolyMatrix.identity(3, DEN)) == []


def test_in_span():
    rows = [[one(), q(1), LaurentScalar.zero(DEN)]]
    assert in_span(rows, [q(2), q(3), LaurentScalar.zero(DEN)], DEN)
    assert not in_span(rows, [one(), one(), LaurentScalar.zero(DEN)], DEN)


def test_minpoly_hecke_matrix():
    """diag(q, q, -q^-1) has minimal polynomial (x - q)(x + q^-1)."""
    m = PolyMatrix.diagonal([q(1), q(1), -q(-1)], DEN)
    poly = minpoly_probe(m)
    assert len(poly) == 3
    roots = factor_signed_monomials(poly)
    assert roots == [SignedMonomial(1, Fraction(1)), SignedMonomial(-1, Fraction(-1))]


def test_factor_rejects_unsupported():
    # x^2 - 2 has no root of the form +-q^s
    with pytest.raises(UnsupportedSpectrumError):
        factor_signed_monomials([LaurentScalar.const(DEN, -2), LaurentScalar.zero(DEN), one()])


def test_poly_from_roots():
    roots = [SignedMonomial(1, Fraction(1)), SignedMonomial(-1, Fraction(-1))]
    poly = poly_from_roots(roots, DEN)
    assert poly[0] == -one()
    assert poly[1] == q(-1) - q(1)
    assert poly[2] == 1


def test_quantum_integers():
    t = q(1)
    assert qint(2, t) == q(1) + q(-1)
    assert qint(3, t) == q(2) + one() + q(-2)
    assert qbinomial(3, 1, t) == qint(3, t)
    assert qbinomial(4, 2, t) == q(4) + q(2) + 2 * one() + q(-2) + q(-4)
    assert qbinomial(2, 3, t) == 0
