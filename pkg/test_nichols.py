"""
Tests for braided words, coproducts, the dual pairing, radicals and quadratic relations.
"""

import pytest

from exact import LaurentScalar, PolyMatrix, rank
from nichols import (
    SizeCapExceeded,
    braid_apply,
    braided_algebra,
    coassociativity_check,
    coproduct_component,
    cubic_e_element,
    cubic_f_element,
    mirrored_cubic_element,
    multiply,
    pairing_blocks,
    pairing_matrix,
    pairs_to_zero,
    quadratic_relations,
    radical_basis,
    radical_ideal_check,
)
from rmx import FREE, build_bundle, convert, vector_rmatrix_star


def star(n):
    return vector_rmatrix_star(n)


def scalars(den):
    one = LaurentScalar.one(den)
    q = LaurentScalar.q_power(den, 1)
    return one, q


def test_braiding_on_letter_pairs():
    r = star(3)
    one, q = scalars(r.den)
    assert braid_apply(r, {(1, 1): one}, 1) == {(1, 1): q}
    # m < n
    assert braid_apply(r, {(0, 2): one}, 1) == {(2, 0): one}
    # m > n
    assert braid_apply(r, {(2, 0): one}, 1) == {(0, 2): one, (2, 0): q - q ** -1}


def test_braid_position_errors():
    r = star(2)
    one, _ = scalars(r.den)
    with pytest.raises(ValueError):
        braid_apply(r, {(0, 1): one}, 2)
    with pytest.raises(ValueError):
        braid_apply(r, {(0, 5): one}, 1)


def test_coproduct_components():
    r = star(3)
    one, q = scalars(r.den)
    assert coproduct_component(r, (1, 1), (1, 1)) == {((1,), (1,)): one + q}
    assert coproduct_component(r, (2, 0), (1, 1)) == {
        ((0,), (2,)): one,
        ((2,), (0,)): one + q - q ** -1,
    }
    assert coproduct_component(r, (0, 0, 0), (1, 2)) == {((0,), (0, 0)): one + q + q ** 2}
    assert coproduct_component(r, (0, 1), (0, 2)) == {((), (0, 1)): one}


def test_coproduct_invalid_split():
    with pytest.raises(ValueError):
        coproduct_component(star(2), (0, 1), (2, 1))


@pytest.mark.parametrize("n,degree", [(2, 3), (2, 4), (3, 3), (3, 4)])
def test_coassociativity(n, degree):
    algebra = braided_algebra(star(n))
    for word in algebra.words(degree):
        assert coassociativity_check(star(n), word)


@pytest.mark.parametrize("n", [2, 3])
def test_braid_relation_on_words(n):
    r = star(n)
    one, _ = scalars(r.den)
    for word in braided_algebra(r).words(3):
        comb = {word: one}
        left = braid_apply(r, braid_apply(r, braid_apply(r, comb, 1), 2), 1)
        right = braid_apply(r, braid_apply(r, braid_apply(r, comb, 2), 1), 2)
        assert left == right


def test_pairing_degree_one_is_identity():
    result = pairing_matrix(star(3), 1)
    assert result.matrix == PolyMatrix.identity(3, result.matrix.den)


def test_pairing_degree_two_values():
    r = star(2)
    one, q = scalars(r.den)
    result = pairing_matrix(r, 2)
    index = {w: i for i, w in enumerate(result.words)}
    m = result.matrix
    assert m[index[(0, 0)], index[(0, 0)]] == one + q
    assert m[index[(1, 0)], index[(1, 0)]] == one + q - q ** -1
    assert m[index[(0, 1)], index[(1, 0)]] == one


def test_pairing_degree_three_rank():
    result = pairing_matrix(star(2), 3)
    assert result.dim == 8
    # 8 words, two of them in the kernel: dimension 6 survives in degree 3
    assert rank(result.matrix) == 6


def test_pairing_blocks_follow_content():
    blocks = pairing_blocks(star(2), 3)
    assert [b.content for b in blocks] == [(0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 1, 1)]
    assert sum(len(b.words) for b in blocks) == 8


def test_pairing_flip_degeneration():
    """With the flip braiding the pairing counts shuffles."""
    flip_braiding = PolyMatrix.identity(9, 6)
    result = pairing_matrix(flip_braiding, 2)
    index = {w: i for i, w in enumerate(result.words)}
    assert result.matrix[index[(2, 2)], index[(2, 2)]] == 2
    assert result.matrix[index[(0, 1)], index[(0, 1)]] == 1
    assert result.matrix[index[(0, 1)], index[(1, 0)]] == 1


def test_size_cap():
    with pytest.raises(SizeCapExceeded):
        pairing_matrix(star(2), 3, cap=4)
    with pytest.raises(ValueError):
        pairing_matrix(star(2), 0)


@pytest.mark.parametrize("n", [2, 3])
def test_degree_two_radicals_are_empty(n):
    result = radical_basis(star(n), 2)
    assert result.right == ()
    assert result.left == ()


@pytest.mark.parametrize("n", [2, 3])
def test_cubic_elements_in_radicals(n):
    result = radical_basis(star(n), 3)
    assert result.verdicts
    assert all(v.passed for v in result.verdicts)


def test_cubic_element_membership_directly():
    r = star(2)
    full = pairing_matrix(r, 3)
    assert pairs_to_zero(full.matrix, full.words, cubic_e_element(2, 1, r.den), "right")
    assert pairs_to_zero(full.matrix, full.words, cubic_f_element(2, 1, r.den), "left")
    # the letters swapped are not annihilated
    assert not pairs_to_zero(full.matrix, full.words, cubic_e_element(1, 2, r.den), "right")


def test_radical_dimensions_n2():
    result = radical_basis(star(2), 3)
    assert len(result.right) == 2
    assert len(result.left) == 2
    assert result.pairing_rank == 6
    # the mirrored element is outside the span of the cubic q-Serre elements
    assert result.excess


def test_mirrored_cubic_element_n2():
    r = star(2)
    one, q = scalars(r.den)
    full = pairing_matrix(r, 3)
    element = {(0, 0, 1): q, (0, 1, 0): -(one + q), (1, 0, 0): one}
    assert mirrored_cubic_element(2, 1, r.den) == element
    assert pairs_to_zero(full.matrix, full.words, element, "right")
    assert pairs_to_zero(full.matrix, full.words, element, "left")
    swapped = {(0, 0, 1): one, (0, 1, 0): -(one + q), (1, 0, 0): q}
    assert not pairs_to_zero(full.matrix, full.words, swapped, "right")


@pytest.mark.parametrize("n", [2, 3])
def test_mirrored_verdicts_reported(n):
    names = [v.name for v in radical_basis(star(n), 3).verdicts]
    pairs = n * (n - 1) // 2
    assert sum(name.startswith("mirrored cubic e") for name in names) == pairs
    assert sum(name.startswith("mirrored cubic f") for name in names) == pairs


def test_radical_ideal_closure():
    r = star(2)
    for x in radical_basis(r, 3).right:
        assert radical_ideal_check(r, x).passed


def test_multiply_concatenates():
    one, q = scalars(6)
    product = multiply({(0,): one}, {(1,): q, (0,): one})
    assert product == {(0, 0): one, (0, 1): q}
    with pytest.raises(ValueError):
        multiply()


def test_free_relations_are_empty():
    assert len(quadratic_relations(PolyMatrix.flip(3, 6))) == 0
    with pytest.raises(ValueError):
        quadratic_relations(FREE)


@pytest.mark.parametrize("n", [2, 3])
def test_sym2_relations_q_squared(n):
    bundle = build_bundle("sym2", n)
    relations = quadratic_relations(convert(bundle.rprime))
    top = n * (n + 1) // 2
    assert len(relations) > 0
    assert relations.q_commutation_implied(top, top - 1, 2)


def test_wedge2_relations_q():
    bundle = build_bundle("wedge2", 4)
    relations = quadratic_relations(convert(bundle.rprime))
    assert relations.q_commutation_implied(6, 5, 1)
