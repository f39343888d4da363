"""
One growth step A_{n-1} => B_n / C_n / D_n.

The new simple root is alpha_n = mu + v, where mu is read from the K-part of
the last diagonal m+ entry and v is central with (v, v) = -deg_q(lambda).
The extended Cartan matrix is computed twice: from the weight lattice
(route A) and from diagonal R_VV exponents (route B).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from exact import LaurentScalar
from lattice import (
    CartanMatrix,
    LatticeError,
    RootDatum,
    Weight,
    inner,
    reference_cartan,
    simple_root,
    symmetrizer,
    type_a,
)
from rmx import HECKE, RMatrixBundle, build_bundle, negative_eigenvalue
from schemas import CheckResult, GrowthReport, ScalarModel, WeightModel

from .mplus import MPlusEntry, mplus_closed_form

logger = logging.getLogger(__name__)

SERIES = {"vector": "B", "sym2": "C", "wedge2": "D"}


class GrowthError(RuntimeError):
    """Raised when the growth data is inconsistent."""


def _fmt(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def normalization_constant(bundle: RMatrixBundle) -> LaurentScalar:
    """
    lambda = q^s from the negative eigenvalue -q^s of P R_VV (shifted by one on the Hecke branch).

    Raises:
        NormalizationError: If the negative eigenvalue is not unique
        GrowthError: If the bundle stores a different lambda
    """
    neg = negative_eigenvalue(bundle)
    shift = 1 if bundle.branch == HECKE else 0
    lam = LaurentScalar.q_power(bundle.den, neg.exponent + shift)
    if bundle.lam is not None and bundle.lam != lam:
        raise GrowthError(f"Bundle lambda {bundle.lam} differs from the spectral value {lam}")
    return lam


@dataclass(frozen=True)
class NewRootData:
    mu: Weight
    vnorm: Fraction
    alpha_n: Weight
    # (alpha_n, alpha_i) for i = 1..n-1
    inner_products: Tuple[Fraction, ...]
    norm: Fraction


def new_root_data(bundle: RMatrixBundle, entries: Optional[Sequence[MPlusEntry]] = None) -> NewRootData:
    """
    Raises:
        GrowthError: If lambda is not a pure power q^-s
    """
    rep = bundle.rep
    lam = bundle.lam if bundle.lam is not None else normalization_constant(bundle)
    if not lam.is_monomial() or lam != LaurentScalar.q_power(lam.den, lam.q_exponent()):
        raise GrowthError(f"lambda = {lam} is not of the form q^-s")
    if entries is None:
        entries = mplus_closed_form(rep.tag, rep.n)
    top = rep.highest_index + 1
    last = next(e for e in entries if e.row == top and e.col == top)
    mu = last.kpart
    vnorm = -lam.q_exponent()
    alpha_n = Weight(mu.coords, vnorm, f"v{rep.n}")
    products = tuple(inner(alpha_n, simple_root(rep.n, i)) for i in range(1, rep.n))
    norm = inner(alpha_n, alpha_n)
    logger.debug("New root for %s at n=%d: mu = %s, (v, v) = %s", rep.tag, rep.n, mu, vnorm)
    return NewRootData(mu, vnorm, alpha_n, products, norm)


def route_b_data(bundle: RMatrixBundle) -> Tuple[Tuple[Fraction, ...], Fraction]:
    """
    (alpha_i, alpha_n) and (alpha_n, alpha_n) from diagonal entries of R_VV.

    (alpha_n, alpha_n) is the exponent of lambda^-1 R_VV[(p, p), (p, p)] for the
    top index p; (alpha_i, alpha_n) is the exponent difference of
    R_VV[(a, p), (a, p)] and R_VV[(b, p), (b, p)] along an E_i edge a -> b.

    Raises:
        GrowthError: If some E_i acts trivially or an entry is not a monomial
    """
    rep, rvv, dim = bundle.rep, bundle.rvv, bundle.dim
    p = rep.highest_index

    def exponent(a: int) -> Fraction:
        value = rvv[a * dim + p, a * dim + p]
        if value.is_zero or not value.is_monomial():
            raise GrowthError(f"R_VV diagonal entry ({a + 1}{p + 1}, {a + 1}{p + 1}) = {value} is not a q-power")
        return value.q_exponent()

    norm = exponent(p) - bundle.lam.q_exponent()
    products = []
    for i in range(1, rep.n):
        edge = next(iter(rep.E(i).entries()), None)
        if edge is None:
            raise GrowthError(f"E_{i} acts trivially on {rep.tag}")
        b, a, _ = edge
        products.append(exponent(a) - exponent(b))
    return tuple(products), norm


def cartan_from_inner(n: int, products: Sequence[Fraction], norm: Fraction) -> CartanMatrix:
    """
    A_{n-1} block plus the new row and column.

    Raises:
        GrowthError: If an entry is not an integer
    """
    datum = type_a(n)
    rows = [list(row) + [None] for row in datum.cartan] + [[None] * n]
    for i, value in enumerate(products):
        a_in = 2 * value / datum.lengths[i]
        a_ni = 2 * value / norm
        if a_in.denominator != 1 or a_ni.denominator != 1:
            raise GrowthError(f"Non-integral Cartan entries a[{i + 1},{n}] = {a_in}, a[{n},{i + 1}] = {a_ni}")
        rows[i][n - 1] = int(a_in)
        rows[n - 1][i] = int(a_ni)
    rows[n - 1][n - 1] = 2
    return tuple(tuple(row) for row in rows)


@dataclass(frozen=True)
class GrowthResult:
    base: RootDatum
    tag: str
    n: int
    lam: LaurentScalar
    mu: Weight
    vnorm: Fraction
    alpha_n: Weight
    cartan: CartanMatrix
    route_b: CartanMatrix
    reference: CartanMatrix
    symmetrizer: Tuple[Fraction, ...]
    new_root: NewRootData
    convention: Optional[str] = None
    checks: Tuple[CheckResult, ...] = field(default=())
    relations: Tuple[CheckResult, ...] = field(default=())

    @property
    def series(self) -> str:
        return SERIES[self.tag]

    @property
    def source(self) -> str:
        return f"A{self.n - 1}"

    @property
    def target(self) -> str:
        return f"{self.series}{self.n}"

    @property
    def matches_reference(self) -> bool:
        return self.cartan == self.reference

    @property
    def q_star(self) -> LaurentScalar:
        """q^(d_n) with d_n = (alpha_n, alpha_n)/2."""
        return LaurentScalar.q_power(self.lam.den, self.symmetrizer[-1])

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks + self.relations)

    def to_report(self) -> GrowthReport:
        return GrowthReport(
            source=self.source,
            target=self.target,
            rep=self.tag,
            n=self.n,
            lam=ScalarModel.of(self.lam),
            mu=WeightModel.of(self.mu),
            vnorm=_fmt(self.vnorm),
            alpha_n=WeightModel.of(self.alpha_n),
            new_root_norm=_fmt(self.new_root.norm),
            new_root_inner=[_fmt(x) for x in self.new_root.inner_products],
            cartan=[list(row) for row in self.cartan],
            reference=[list(row) for row in self.reference],
            matches_reference=self.matches_reference,
            symmetrizer=[_fmt(d) for d in self.symmetrizer],
            q_star=ScalarModel.of(self.q_star),
            mplus_convention=self.convention,
            relations=list(self.relations),
            checks=list(self.checks),
        )


def _symmetrizer_check(cartan: CartanMatrix, lengths: Sequence[Fraction]) -> Tuple[Tuple[Fraction, ...], CheckResult]:
    name = "extended Cartan matrix is symmetrized by the root lengths"
    d = tuple(Fraction(x) / 2 for x in lengths)
    size = len(cartan)
    for i in range(size):
        for j in range(size):
            if d[i] * cartan[i][j] != d[j] * cartan[j][i]:
                return d, CheckResult(name=name, passed=False, location=f"({i + 1}, {j + 1})",
                                      expected=str(d[j] * cartan[j][i]), actual=str(d[i] * cartan[i][j]))
    try:
        found = symmetrizer(cartan, anchor=[d[0]] + [None] * (size - 1))
    except LatticeError as e:
        return d, CheckResult(name=name, passed=False, detail=str(e))
    if tuple(found) != d:
        return d, CheckResult(name=name, passed=False, expected=", ".join(map(_fmt, d)),
                              actual=", ".join(map(_fmt, found)))
    return d, CheckResult(name=name, passed=True, detail=", ".join(map(_fmt, d)))


def extended_cartan(tag: str, n: int, bundle: Optional[RMatrixBundle] = None) -> GrowthResult:
    """
    Extended Cartan matrix by both routes.

    Args:
        tag: "vector", "sym2" or "wedge2"
        n: Rank of the grown algebra
        bundle: Prebuilt bundle, build_bundle(tag, n) by default

    Raises:
        GrowthError: If the routes disagree or an entry is not integral
    """
    bundle = bundle or build_bundle(tag, n)
    tag = bundle.rep.tag
    lam = normalization_constant(bundle)
    data = new_root_data(bundle)
    route_a = cartan_from_inner(n, data.inner_products, data.norm)
    products_b, norm_b = route_b_data(bundle)
    route_b = cartan_from_inner(n, products_b, norm_b)
    if route_a != route_b:
        raise GrowthError(f"Cartan routes disagree for {tag} at n={n}: {route_a} vs {route_b}")
    lengths = list(type_a(n).lengths) + [data.norm]
    d, sym_check = _symmetrizer_check(route_a, lengths)
    reference = reference_cartan(SERIES[tag], n)
    checks = [
        CheckResult(name=f"Cartan routes agree for {tag} at n={n}", passed=True),
        sym_check,
        CheckResult(
            name=f"extended Cartan matrix is {SERIES[tag]}{n}",
            passed=route_a == reference,
            expected=str([list(r) for r in reference]),
            actual=str([list(r) for r in route_a]),
        ),
        CheckResult(
            name="central part of the new root is orthogonal to the base roots",
            passed=all(
                inner(data.alpha_n, simple_root(n, i)) == inner(data.mu, simple_root(n, i)) for i in range(1, n)
            ) and data.norm == inner(data.mu, data.mu) + data.vnorm,
        ),
    ]
    for check in checks:
        if not check.passed:
            logger.warning("Growth check failed: %s %s", check.name, check.detail)
    logger.info("Extended Cartan matrix for %s at n=%d: %s", tag, n, route_a)
    return GrowthResult(
        base=type_a(n),
        tag=tag,
        n=n,
        lam=lam,
        mu=data.mu,
        vnorm=data.vnorm,
        alpha_n=data.alpha_n,
        cartan=route_a,
        route_b=route_b,
        reference=reference,
        symmetrizer=d,
        new_root=data,
        checks=tuple(checks),
    )


def serre_degrees(cartan: CartanMatrix) -> Dict[Tuple[int, int], int]:
    """1 - a_ij for every pair i != j, 1-based."""
    size = len(cartan)
    return {(i + 1, j + 1): 1 - cartan[i][j] for i in range(size) for j in range(size) if i != j}
