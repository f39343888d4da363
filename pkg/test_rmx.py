"""
Tests for R-matrix construction, cabling, spectra, normalization and R'.
"""

from fractions import Fraction

import pytest

from exact import LaurentScalar, PolyMatrix, SignedMonomial
from rmx import (
    FREE,
    build_bundle,
    cable_rmatrix,
    check_braid_relation,
    check_normalized_minpoly,
    check_qybe,
    check_rprime_closed_form,
    check_rprime_conditions,
    check_triangular,
    check_universal_oracle,
    convert,
    index_entry,
    pr_entry,
    pr_matrix,
    seed_braid,
    spectrum,
    universal_r_vector,
    vector_rmatrix_star,
)


def qp(den, exp, coeff=1):
    return LaurentScalar.q_power(den, exp, coeff)


def test_star_entries_n2():
    star = vector_rmatrix_star(2)
    den = star.den
    q = qp(den, 1)
    op = convert(star)
    assert index_entry(op, 1, 1, 1, 1) == q
    assert index_entry(op, 2, 2, 2, 2) == q
    assert index_entry(op, 1, 2, 2, 1) == q - q ** -1
    assert index_entry(op, 2, 1, 1, 2) == 0
    assert index_entry(op, 1, 2, 1, 2) == 1


def test_convert_is_involution():
    star = vector_rmatrix_star(3)
    assert convert(convert(star)) == star


@pytest.mark.parametrize("n", [2, 3])
def test_universal_r_matches_star(n):
    assert check_universal_oracle(n).passed


def test_universal_r_entries_n2():
    r = universal_r_vector(2)
    assert r[0, 0] == qp(r.den, Fraction(1, 2))


def test_universal_r_zero_truncation_is_cartan_factor():
    r = universal_r_vector(3, max_order=0)
    assert r.is_diagonal()
    assert r[0, 0] == qp(r.den, Fraction(2, 3))


@pytest.mark.parametrize("n", [2, 3])
def test_star_satisfies_qybe(n):
    assert check_qybe(vector_rmatrix_star(n)).passed


def test_qybe_probe_mode():
    result = check_qybe(vector_rmatrix_star(4), mode="probe")
    assert result.passed
    assert "probes" in result.detail


def test_qybe_identity():
    assert check_qybe(PolyMatrix.identity(9, 6)).passed


def test_qybe_broken_diagonal_fails():
    """Replacing R^{22}_{22} = q by 1 breaks the equation on x1 (x) x2 (x) x2."""
    star = vector_rmatrix_star(2)
    entries = {(r, c): v for r, c, v in star.entries()}
    entries[(3, 3)] = LaurentScalar.one(star.den)
    broken = PolyMatrix(4, 4, star.den, entries)
    result = check_qybe(broken, mode="exhaustive")
    assert not result.passed
    assert result.location is not None


def test_qybe_rejects_non_square_size():
    with pytest.raises(ValueError):
        check_qybe(PolyMatrix.identity(5, 6))
    with pytest.raises(ValueError):
        check_qybe(vector_rmatrix_star(9), mode="exhaustive")


@pytest.mark.parametrize("n", [2, 3])
def test_seed_braid_relation(n):
    assert check_braid_relation(seed_braid(n)).passed


def test_vector_spectrum_hecke():
    bundle = build_bundle("vector", 3)
    assert bundle.eigenvalues == (
        SignedMonomial(1, Fraction(2, 3)),
        SignedMonomial(-1, Fraction(-4, 3)),
    )
    assert bundle.lam == qp(bundle.den, Fraction(-1, 3))
    assert bundle.rprime == FREE
    assert check_normalized_minpoly(bundle).passed


def test_sym2_n3_proof_entries():
    bundle = cable_rmatrix(3, "sym2")
    r, den = bundle.rvv, bundle.den
    q = qp(den, 1)
    assert pr_entry(r, 1, 2, 1, 2) == 0
    assert pr_entry(r, 1, 2, 2, 1) == qp(den, Fraction(2, 3))
    assert pr_entry(r, 2, 1, 2, 1) == qp(den, Fraction(2, 3)) * (q + q ** -1) * (q - q ** -1)


def test_sym2_n3_spectrum():
    bundle = spectrum(cable_rmatrix(3, "sym2"))
    assert set(bundle.eigenvalues) == {
        SignedMonomial(1, Fraction(8, 3)),
        SignedMonomial(1, Fraction(-10, 3)),
        SignedMonomial(-1, Fraction(-4, 3)),
    }


def test_sym2_n2_nonsymmetric_with_witness():
    bundle = spectrum(cable_rmatrix(2, "sym2"))
    assert not bundle.spectrum.symmetric
    i, j, k, l = bundle.spectrum.witness
    assert pr_entry(bundle.rvv, i, j, k, l) != pr_entry(bundle.rvv, k, l, i, j)


def test_wedge2_n4_spectrum_and_entries():
    bundle = build_bundle("wedge2", 4)
    q = qp(bundle.den, 1)
    assert bundle.spectrum.symmetric
    # q on the 20-dim component, -q^-1 on the 15-dim one, q^-5 on the trivial one
    assert sorted(bundle.eigenvalues, key=lambda r: r.exponent) == [
        SignedMonomial(1, Fraction(-5)),
        SignedMonomial(-1, Fraction(-1)),
        SignedMonomial(1, Fraction(1)),
    ]
    assert pr_entry(bundle.rvv, 1, 2, 2, 1) == 1
    assert pr_entry(bundle.rvv, 2, 1, 2, 1) == q - q ** -1
    assert bundle.lam == q ** -1


def test_wedge2_n4_trace_matches_component_dimensions():
    bundle = spectrum(cable_rmatrix(4, "wedge2"))
    den = bundle.den
    pr = pr_matrix(bundle.rvv)
    trace = LaurentScalar.zero(den)
    for i in range(pr.nrows):
        trace = trace + pr[i, i]
    assert trace == qp(den, 1, 20) - qp(den, -1, 15) + qp(den, -5)


def test_wedge2_n5_spectrum():
    bundle = spectrum(cable_rmatrix(5, "wedge2"))
    assert bundle.spectrum.symmetric
    assert set(bundle.eigenvalues) == {
        SignedMonomial(1, Fraction(6, 5)),
        SignedMonomial(-1, Fraction(-4, 5)),
        SignedMonomial(1, Fraction(-24, 5)),
    }


@pytest.mark.parametrize("tag,n", [("sym2", 2), ("sym2", 3), ("wedge2", 4)])
def test_rprime_closed_form(tag, n):
    bundle = build_bundle(tag, n)
    assert bundle.lam == qp(bundle.den, Fraction(-4, n))
    assert check_rprime_closed_form(bundle).passed
    assert check_normalized_minpoly(bundle).passed


@pytest.mark.parametrize("tag,n", [("vector", 3), ("sym2", 2), ("wedge2", 4), ("wedge2", 5)])
def test_bundle_carries_passing_checks(tag, n):
    checks = build_bundle(tag, n).checks
    names = [c.name for c in checks]
    assert f"{tag} R-matrix triangularity at n={n}" in names
    assert f"{tag} R' closed form at n={n}" in names
    assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]


def test_rprime_conditions_sym2_n2():
    bundle = build_bundle("sym2", 2)
    results = check_rprime_conditions(convert(bundle.rnorm), convert(bundle.rprime))
    assert [r.passed for r in results] == [True, True, True, True]


def test_rprime_conditions_free_branch():
    """With R' = P the mixed Yang-Baxter identities hold for any R."""
    star = vector_rmatrix_star(2)
    results = check_rprime_conditions(star, PolyMatrix.flip(2, star.den))
    assert results[0].passed and results[1].passed


@pytest.mark.parametrize("tag,n", [("vector", 3), ("sym2", 2), ("wedge2", 4)])
def test_triangular_in_index_layout(tag, n):
    assert check_triangular(build_bundle(tag, n)).passed


@pytest.mark.parametrize("tag,n", [("vector", 3), ("sym2", 2), ("wedge2", 4)])
def test_normalized_braid_relation(tag, n):
    bundle = build_bundle(tag, n)
    braid = PolyMatrix.flip(bundle.dim, bundle.den) @ bundle.rnorm
    assert check_braid_relation(braid, mode="probe").passed


def test_bundle_report_serializes():
    report = build_bundle("sym2", 2).to_report()
    data = report.model_dump()
    assert data["rep"] == "sym2"
    assert data["lam"]["text"] == "q^(-2)"
    assert not data["rprime_free"]
