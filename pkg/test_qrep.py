"""
Tests for the vector, symmetric-square and exterior-square representations.
"""

from fractions import Fraction

import pytest

from exact import LaurentScalar, PolyMatrix
from lattice import inner, simple_root
from qrep import RepFactory, RepresentationError, raw_wedge2_rep, sym2_rep, torus_action, vector_rep, wedge2_rep


def commutator(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    return a @ b - b @ a


@pytest.mark.parametrize("tag,n", [("vector", 3), ("sym2", 3), ("wedge2", 4)])
def test_quantum_group_relations(tag, n):
    """[E_i, F_j] = delta_ij (K_i - K_i^-1)/(q - q^-1) and K_i E_j K_i^-1 = q^(a_ij) E_j."""
    rep = RepFactory.create(tag, n)
    gap = LaurentScalar.q_power(rep.den, 1) - LaurentScalar.q_power(rep.den, -1)
    for i in range(1, n):
        k, k_inv = torus_action(rep, i), torus_action(rep, i, -1)
        for j in range(1, n):
            lhs = commutator(rep.E(i), rep.F(j)).scale(gap)
            expected = (k - k_inv) if i == j else PolyMatrix(rep.dim, rep.dim, rep.den)
            assert lhs == expected
            a_ij = inner(simple_root(n, i), simple_root(n, j))
            assert k @ rep.E(j) @ k_inv == rep.E(j).scale(LaurentScalar.q_power(rep.den, a_ij))


def test_dimensions_and_labels():
    assert vector_rep(4).dim == 4
    assert sym2_rep(3).dim == 6
    assert wedge2_rep(4).dim == 6
    assert sym2_rep(2).labels == ("x1.x1", "x1.x2", "x2.x2")
    assert wedge2_rep(4).labels[0] == "x1^x2"


def test_vector_action():
    rep = vector_rep(3)
    assert rep.E(1)[1, 0] == 1
    assert rep.F(2)[1, 2] == 1
    assert rep.highest_index == 2


def test_weights_are_distinct_and_ordered():
    rep = sym2_rep(3)
    assert len(set(rep.weights)) == rep.dim
    # E raises the basis index
    for i in range(1, 3):
        assert rep.E(i).is_lower_triangular(strict=True)


def test_sym2_action_coefficients():
    """E_1 s_11 = s_12, E_1 s_12 = (q + q^-1) s_22 and F_1 s_12 = (q + q^-1) s_11."""
    rep = sym2_rep(2)
    q = LaurentScalar.q_power(rep.den, 1)
    assert rep.E(1)[1, 0] == 1
    assert rep.E(1)[2, 1] == q + q ** -1
    assert rep.F(1)[0, 1] == q + q ** -1


def test_wedge2_requires_n4():
    with pytest.raises(RepresentationError, match="wedge2 requires n ≥ 4"):
        wedge2_rep(3)
    with pytest.raises(RepresentationError):
        RepFactory.create("wedge2", 3)


def test_raw_wedge2_small_n():
    assert raw_wedge2_rep(3).dim == 3


def test_factory():
    assert set(RepFactory.available()) >= {"vector", "sym2", "wedge2"}
    assert RepFactory.min_n("wedge2") == 4
    with pytest.raises(ValueError, match="Available"):
        RepFactory.create("adjoint", 3)
    assert RepFactory.create("sym2", 2) is RepFactory.create("sym2", 2)


def test_torus_fractional_power():
    rep = vector_rep(2)
    k_half = torus_action(rep, 1, Fraction(1, 2))
    assert k_half[0, 0] == LaurentScalar.q_power(rep.den, Fraction(-1, 2))
    assert k_half @ k_half == torus_action(rep, 1)
