"""
Closed-form FRT generators m+ and their pairing with the coordinate functions.

Diagonal entries are K-products (m+)^i_i = K_{-mu_i}; minor-diagonal entries
are c E_k (m+)^j_j. An entry u pairs with t^k_l through the R-matrix slice
<(m+)^i_j, t^k_l> = R_VV^{ik}_{jl}. Which way u is evaluated in the
representation (through the antipode or not, the sign of E, transposed or
not) is found by trying every combination; exactly one must fit all entries.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from exact import LaurentScalar, PolyMatrix
from lattice import Weight, simple_root
from qrep import Rep, RepFactory, RepresentationError, weight_action
from rmx import RMatrixBundle, index_entry
from schemas import CheckResult

logger = logging.getLogger(__name__)


class MPlusError(RuntimeError):
    """Raised when no single evaluation convention fits every m+ entry."""


@dataclass(frozen=True)
class MPlusEntry:
    """One entry (m+)^row_col = prefactor * [E_efactor] * K_kpart, 1-based indices."""

    row: int
    col: int
    kpart: Weight
    prefactor: LaurentScalar
    efactor: Optional[int] = None

    @property
    def is_diagonal(self) -> bool:
        return self.row == self.col

    def __str__(self) -> str:
        e = f"E_{self.efactor} " if self.efactor else ""
        return f"(m+)^{self.row}_{self.col} = ({self.prefactor}) {e}K[{self.kpart}]"


@dataclass(frozen=True)
class Convention:
    antipode: str
    e_sign: int
    index: str

    def __str__(self) -> str:
        return f"antipode={self.antipode}, E sign={self.e_sign:+d}, index={self.index}"


CONVENTIONS: Tuple[Convention, ...] = tuple(
    Convention(antipode, sign, index)
    for antipode, sign, index in itertools.product(("none", "inverse"), (1, -1), ("direct", "transposed"))
)


def _minor_pairs(tag: str, n: int, q: LaurentScalar) -> List[Tuple[int, int, int, LaurentScalar]]:
    gap = q - q ** -1
    if tag == "vector":
        return [(i, i + 1, i, gap) for i in range(1, n)]
    if tag == "sym2":
        pairs = [(1, 2, 1, (q + q ** -1) * gap)]
        pairs += [(j - 1, j, j - 1, gap) for j in range(3, n + 1)]
        return pairs
    if tag == "wedge2":
        pairs = [(i - 1, i, i, gap) for i in range(2, n)]
        pairs.append((n - 1, 2 * n - 3, 1, gap))
        return pairs
    raise RepresentationError(f"No m+ closed form for '{tag}'. Available: vector, sym2, wedge2")


def mplus_closed_form(tag: str, n: int) -> List[MPlusEntry]:
    """
    Diagonal and minor-diagonal m+ entries.

    Args:
        tag: "vector", "sym2" or "wedge2"
        n: Rank parameter

    Returns:
        List[MPlusEntry]: Diagonal entries in basis order, then minor entries

    Raises:
        RepresentationError: For an unsupported tag or n out of range
    """
    rep = RepFactory.create(tag, n)
    q = LaurentScalar.q_power(rep.den, 1)
    one = LaurentScalar.one(rep.den)
    entries = [MPlusEntry(i + 1, i + 1, -mu, one) for i, mu in enumerate(rep.weights)]
    for row, col, k, prefactor in _minor_pairs(rep.tag, n, q):
        entries.append(MPlusEntry(row, col, -rep.weights[col - 1], prefactor, k))
    return entries


def evaluate(rep: Rep, entry: MPlusEntry, convention: Convention) -> PolyMatrix:
    """Matrix of an entry in the representation under one convention."""
    if entry.efactor is None:
        kpart = entry.kpart if convention.antipode == "none" else -entry.kpart
        matrix = weight_action(rep, kpart).scale(entry.prefactor)
    else:
        e = rep.E(entry.efactor).scale(LaurentScalar.q_power(rep.den, 0, convention.e_sign))
        if convention.antipode == "none":
            matrix = (e @ weight_action(rep, entry.kpart)).scale(entry.prefactor)
        else:
            # S^-1(E_k K_w) = -K_{-w - alpha_k} E_k
            shifted = -(entry.kpart + simple_root(rep.n, entry.efactor))
            matrix = (weight_action(rep, shifted) @ e).scale(-entry.prefactor)
    return matrix.transpose() if convention.index == "transposed" else matrix


def rmatrix_slice(rvv: PolyMatrix, dim: int, row: int, col: int) -> PolyMatrix:
    """X[k, l] = R_VV^{row k}_{col l}, 1-based row/col."""
    entries = {}
    for k in range(dim):
        for l in range(dim):
            value = index_entry(rvv, row, k + 1, col, l + 1)
            if not value.is_zero:
                entries[(k, l)] = value
    return PolyMatrix(dim, dim, rvv.den, entries)


def _first_mismatch(rep: Rep, rvv: PolyMatrix, entries: Sequence[MPlusEntry],
                    convention: Convention) -> Optional[CheckResult]:
    for entry in entries:
        actual = evaluate(rep, entry, convention)
        expected = rmatrix_slice(rvv, rep.dim, entry.row, entry.col)
        diff = expected.first_difference(actual)
        if diff is not None:
            r, c, a, b = diff
            return CheckResult(
                name=f"m+ pairing for {rep.tag} at n={rep.n}",
                passed=False,
                detail=f"{entry} under {convention}",
                location=f"t^{r + 1}_{c + 1}",
                expected=str(a),
                actual=str(b),
            )
    return None


def counit_check(rep: Rep, entries: Sequence[MPlusEntry]) -> CheckResult:
    """Diagonal entries evaluate to diagonal matrices of pure q-powers."""
    name = f"m+ diagonal entries are pure q-powers for {rep.tag} at n={rep.n}"
    for entry in entries:
        if not entry.is_diagonal:
            continue
        matrix = evaluate(rep, entry, Convention("none", 1, "direct"))
        if not matrix.is_diagonal() or not all(v.is_monomial() for _, _, v in matrix.entries()):
            return CheckResult(name=name, passed=False, detail=str(entry))
    return CheckResult(name=name, passed=True)


def verify_mplus_pairing(bundle: RMatrixBundle, entries: Optional[Sequence[MPlusEntry]] = None) -> Tuple[Convention, List[CheckResult]]:
    """
    Check <(m+)^i_j, t^k_l> = R_VV^{ik}_{jl} for every entry and all k, l.

    Args:
        bundle: R-matrix bundle of the representation
        entries: Closed-form entries, mplus_closed_form by default

    Returns:
        Tuple of the single fitting convention and the per-entry checks

    Raises:
        MPlusError: If no convention or more than one fits all entries
    """
    rep = bundle.rep
    if entries is None:
        entries = mplus_closed_form(rep.tag, rep.n)
    passing: List[Convention] = []
    mismatches: Dict[Convention, CheckResult] = {}
    for convention in CONVENTIONS:
        mismatch = _first_mismatch(rep, bundle.rvv, entries, convention)
        if mismatch is None:
            passing.append(convention)
        else:
            mismatches[convention] = mismatch
            logger.debug("m+ convention %s rejected: %s", convention, mismatch.detail)
    if len(passing) != 1:
        if passing:
            raise MPlusError(f"{len(passing)} m+ conventions fit {rep.tag} at n={rep.n}: "
                             + "; ".join(str(c) for c in passing))
        first = mismatches[CONVENTIONS[0]]
        raise MPlusError(f"No m+ convention fits {rep.tag} at n={rep.n}; first counterexample "
                         f"{first.detail} at {first.location}: expected {first.expected}, got {first.actual}")
    convention = passing[0]
    checks = [
        CheckResult(name=f"m+ pairing {entry.row},{entry.col} for {rep.tag} at n={rep.n}", passed=True,
                    detail=str(convention))
        for entry in entries
    ]
    checks.append(counit_check(rep, entries))
    logger.info("m+ entries for %s at n=%d fit convention %s", rep.tag, rep.n, convention)
    return convention, checks
