"""
Tests for m+ closed forms, new root data, extended Cartan matrices and the growth tree.
"""

from dataclasses import replace
from fractions import Fraction

import pytest

from exact import LaurentScalar
from grow import (
    CITED,
    VERIFIED,
    GrowthError,
    MPlusError,
    build_tree,
    cartan_from_inner,
    cubic_radical_instance,
    extended_cartan,
    growth_step,
    mplus_closed_form,
    new_root_data,
    node_key,
    normalization_constant,
    serre_degrees,
    sorted_nodes,
    verify_mplus_pairing,
)
from lattice import Weight, reference_cartan
from qrep import RepresentationError
from rmx import build_bundle


def qp(den, exp):
    return LaurentScalar.q_power(den, exp)


@pytest.mark.parametrize("tag,n,exp", [
    ("vector", 2, Fraction(-1, 2)),
    ("vector", 3, Fraction(-1, 3)),
    ("sym2", 3, Fraction(-4, 3)),
    ("wedge2", 4, Fraction(-1)),
])
def test_normalization_constant(tag, n, exp):
    bundle = build_bundle(tag, n)
    assert normalization_constant(bundle) == qp(bundle.den, exp)


def test_sym2_closed_form_entries():
    entries = mplus_closed_form("sym2", 3)
    den = entries[0].prefactor.den
    q = qp(den, 1)
    minor = next(e for e in entries if (e.row, e.col) == (1, 2))
    assert minor.efactor == 1
    assert minor.prefactor == (q + q ** -1) * (q - q ** -1)
    last = next(e for e in entries if (e.row, e.col) == (6, 6))
    assert last.efactor is None
    assert last.kpart == Weight((Fraction(-2, 3), Fraction(-4, 3)))


def test_wedge2_closed_form_special_entry():
    entries = mplus_closed_form("wedge2", 5)
    special = next(e for e in entries if (e.row, e.col) == (4, 7))
    assert special.efactor == 1
    assert [e.efactor for e in entries if e.efactor and e.col == e.row + 1] == [2, 3, 4]


def test_closed_form_rejects_bad_input():
    with pytest.raises(ValueError, match="Available"):
        mplus_closed_form("adjoint", 3)
    with pytest.raises(RepresentationError):
        mplus_closed_form("wedge2", 3)


@pytest.mark.parametrize("tag,n", [("vector", 2), ("vector", 3), ("sym2", 2), ("sym2", 3), ("wedge2", 4)])
def test_mplus_pairing(tag, n):
    convention, checks = verify_mplus_pairing(build_bundle(tag, n))
    assert all(c.passed for c in checks)
    assert str(convention) == "antipode=inverse, E sign=-1, index=direct"


def test_mplus_pairing_rejects_wrong_prefactor():
    bundle = build_bundle("vector", 2)
    entries = mplus_closed_form("vector", 2)
    broken = [replace(e, prefactor=e.prefactor + 1) if e.efactor else e for e in entries]
    with pytest.raises(MPlusError):
        verify_mplus_pairing(bundle, broken)


@pytest.mark.parametrize("tag,n,norm,products", [
    ("vector", 3, 1, (0, -1)),
    ("sym2", 3, 4, (0, -2)),
    ("wedge2", 4, 2, (0, -1, 0)),
])
def test_new_root_data(tag, n, norm, products):
    data = new_root_data(build_bundle(tag, n))
    assert data.norm == norm
    assert data.inner_products == tuple(Fraction(p) for p in products)


@pytest.mark.parametrize("tag,n,expected", [
    ("vector", 2, ((2, -1), (-2, 2))),
    ("sym2", 3, ((2, -1, 0), (-1, 2, -2), (0, -1, 2))),
    ("wedge2", 4, reference_cartan("D", 4)),
])
def test_extended_cartan(tag, n, expected):
    result = extended_cartan(tag, n)
    assert result.cartan == expected
    assert result.route_b == result.cartan
    assert result.matches_reference
    assert all(c.passed for c in result.checks)


@pytest.mark.parametrize("tag,n", [("vector", 4), ("vector", 5), ("sym2", 2), ("sym2", 4), ("wedge2", 5)])
def test_extended_cartan_series(tag, n):
    assert extended_cartan(tag, n).matches_reference


@pytest.mark.parametrize("tag,exp", [("vector", Fraction(1, 2)), ("sym2", Fraction(2)), ("wedge2", Fraction(1))])
def test_q_star(tag, exp):
    result = extended_cartan(tag, 4)
    assert result.q_star == qp(result.lam.den, exp)


def test_non_integral_cartan_entry():
    with pytest.raises(GrowthError):
        cartan_from_inner(2, [Fraction(1, 2)], Fraction(1))


def test_serre_degrees_b2():
    assert serre_degrees(((2, -1), (-2, 2))) == {(1, 2): 2, (2, 1): 3}


@pytest.mark.parametrize("tag,n", [("vector", 2), ("vector", 3), ("sym2", 2), ("sym2", 3), ("wedge2", 4)])
def test_growth_step_passes(tag, n):
    result = growth_step(tag, n)
    failures = [c.name for c in result.checks + result.relations if not c.passed]
    assert failures == []
    report = result.to_report().model_dump(by_alias=True)
    assert report["lambda"]["text"] == str(result.lam)


def test_cubic_radical_instance_vector():
    assert cubic_radical_instance(build_bundle("vector", 3)).passed


def test_tree_low_rank_edges():
    tree = build_tree(4)
    for source, target in [("A1", "B2"), ("A2", "C3"), ("A3", "D4"), ("A1", "C2")]:
        assert tree.edges[source, target]["status"] == VERIFIED
    assert tree.edges["A3", "D4"]["lam"] == "q^(-1)"
    assert tree.edges["A1", "A2"]["status"] == CITED


def test_tree_without_d_edge():
    tree = build_tree(3, include_cited=False)
    assert not any(node.startswith("D") for node in tree.nodes)
    assert all(data["status"] == VERIFIED for _, _, data in tree.edges(data=True))


def test_tree_single_node():
    tree = build_tree(1)
    assert list(tree.nodes) == ["A1"]
    with pytest.raises(ValueError):
        build_tree(0)


def test_node_order():
    assert sorted_nodes(build_tree(2, include_cited=False)) == ["A1", "B2", "C2"]
    assert node_key("D4") == (3, 4)
    with pytest.raises(ValueError):
        node_key("X1")
