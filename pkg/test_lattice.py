"""
Tests for Cartan matrices, symmetrizers and the A_{n-1} weight lattice.
"""

from fractions import Fraction

import pytest

from lattice import (
    LatticeError,
    cartan_matrix,
    dynkin_edges,
    epsilon_bar,
    fundamental_weight,
    fundamental_weight_from_inverse,
    inner,
    reference_cartan,
    simple_root,
    symmetrizer,
    zero_weight,
)


def test_cartan_matrices():
    assert cartan_matrix("A", 2) == ((2, -1), (-1, 2))
    assert cartan_matrix("B", 2) == ((2, -1), (-2, 2))
    assert cartan_matrix("C", 3) == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))
    assert cartan_matrix("D", 4) == (
        (2, -1, 0, 0),
        (-1, 2, -1, -1),
        (0, -1, 2, 0),
        (0, -1, 0, 2),
    )


def test_cartan_rejects_bad_input():
    with pytest.raises(ValueError):
        cartan_matrix("E", 6)
    with pytest.raises(ValueError):
        cartan_matrix("D", 3)
    with pytest.raises(ValueError):
        reference_cartan("A", 3)


def test_symmetrizer():
    assert symmetrizer(cartan_matrix("B", 3)) == [Fraction(1), Fraction(1), Fraction(1, 2)]
    assert symmetrizer(cartan_matrix("C", 3)) == [Fraction(1), Fraction(1), Fraction(2)]
    with pytest.raises(LatticeError):
        symmetrizer([[2, -1], [0, 2]])


def test_dynkin_edges_multilaced():
    edges = dynkin_edges(cartan_matrix("B", 2))
    assert edges == [(0, 1, 2, 1)]
    assert dynkin_edges(cartan_matrix("A", 3)) == [(0, 1, 1, None), (1, 2, 1, None)]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_fundamental_weights(n):
    for i in range(1, n):
        w = fundamental_weight(n, i)
        assert w == fundamental_weight_from_inverse(n, i)
        for j in range(1, n):
            assert inner(w, simple_root(n, j)) == (1 if i == j else 0)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_epsilon_bar_gram(n):
    """(eps_i, eps_j) = delta_ij - 1/n for the traceless epsilons."""
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            expected = (1 if i == j else 0) - Fraction(1, n)
            assert inner(epsilon_bar(n, i), epsilon_bar(n, j)) == expected


def test_weight_arithmetic():
    a1 = simple_root(3, 1)
    assert (a1 - a1).is_zero
    assert inner(a1 + simple_root(3, 2), a1) == 1
    assert inner(a1.scale(2), a1) == 4
    assert zero_weight(3).is_zero
    with pytest.raises(ValueError):
        simple_root(3, 3)
