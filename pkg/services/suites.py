"""
Named verification suites.

Each suite is a list of check builders; the runner times every check and
turns exceptions into failed results so one broken stage does not hide the
rest of the report.
"""

import logging
import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from exact import LaurentScalar, SignedMonomial
from grow import VERIFIED, build_tree, extended_cartan, growth_step, verify_mplus_pairing
from nichols import braided_algebra, coproduct_component, pairing_matrix, radical_basis
from qrep import RepFactory
from rmx import (
    RMatrixBundle,
    build_bundle,
    cable_rmatrix,
    check_normalized_minpoly,
    check_qybe,
    check_rprime_closed_form,
    check_rprime_conditions,
    check_universal_oracle,
    convert,
    pr_entry,
    spectrum,
    vector_rmatrix_star,
)
from schemas import CheckResult, SuiteReport

logger = logging.getLogger(__name__)

CheckBuilder = Callable[[], List[CheckResult]]


def _q(den: int, exp) -> LaurentScalar:
    return LaurentScalar.q_power(den, exp)


def _roots(*pairs) -> List[SignedMonomial]:
    return [SignedMonomial(sign, Fraction(exp)) for sign, exp in pairs]


def _compare(name: str, expected, actual) -> CheckResult:
    return CheckResult(name=name, passed=expected == actual, expected=str(expected), actual=str(actual))


def _spectrum_check(name: str, bundle: RMatrixBundle, expected: List[SignedMonomial]) -> CheckResult:
    """Roots are compared as multisets: a repeated factor is a mismatch."""
    actual = list(bundle.eigenvalues)
    return CheckResult(
        name=name,
        passed=Counter(actual) == Counter(expected),
        expected=", ".join(sorted(map(str, expected))),
        actual=", ".join(sorted(map(str, actual))),
    )


def star_checks() -> List[CheckResult]:
    results = []
    for n in range(2, 6):
        star = vector_rmatrix_star(n)
        results.append(check_qybe(star, mode="exhaustive" if n <= 2 else "probe"))
        bundle = spectrum(RMatrixBundle(rep=RepFactory.create("vector", n), rvv=convert(star)))
        results.append(_spectrum_check(f"star PR minimal polynomial roots at n={n}", bundle, _roots((1, 1), (-1, -1))))
    return results


def universal_checks() -> List[CheckResult]:
    return [check_universal_oracle(n) for n in (2, 3)]


def sym2_spectrum_checks() -> List[CheckResult]:
    results = []
    for n in (2, 3, 4):
        bundle = spectrum(cable_rmatrix(n, "sym2"))
        den, rvv = bundle.den, bundle.rvv
        q = _q(den, 1)
        base = _q(den, Fraction(2 * (n - 2), n))
        expected = _roots((1, Fraction(4 * (n - 1), n)), (1, Fraction(-2 * (n + 2), n)), (-1, Fraction(-4, n)))
        results.append(_spectrum_check(f"sym2 minimal polynomial at n={n}", bundle, expected))
        results.append(_compare(f"sym2 (PR)^12_12 at n={n}", 0, pr_entry(rvv, 1, 2, 1, 2)))
        results.append(_compare(f"sym2 (PR)^12_21 at n={n}", base, pr_entry(rvv, 1, 2, 2, 1)))
        results.append(_compare(f"sym2 (PR)^21_21 at n={n}", base * (q + q ** -1) * (q - q ** -1),
                                pr_entry(rvv, 2, 1, 2, 1)))
        witness = bundle.spectrum.witness
        results.append(CheckResult(name=f"sym2 PR is not symmetric at n={n}", passed=witness is not None,
                                   location=str(witness) if witness else None))
    return results


def wedge2_spectrum_checks() -> List[CheckResult]:
    """
    The third root sits on the top exterior power of the fundamental
    representation: q^(-4 - 4/n), which is q^-5 at n = 4.
    """
    results = []
    for n in (4, 5):
        bundle = spectrum(cable_rmatrix(n, "wedge2"))
        den, rvv = bundle.den, bundle.rvv
        q = _q(den, 1)
        base = _q(den, Fraction(n - 4, n))
        expected = _roots((1, Fraction(2 * (n - 2), n)), (-1, Fraction(-4, n)), (1, Fraction(-4 * (n + 1), n)))
        results.append(_spectrum_check(f"wedge2 minimal polynomial at n={n}", bundle, expected))
        results.append(_compare(f"wedge2 (PR)^12_21 at n={n}", base, pr_entry(rvv, 1, 2, 2, 1)))
        results.append(_compare(f"wedge2 (PR)^21_21 at n={n}", base * (q - q ** -1), pr_entry(rvv, 2, 1, 2, 1)))
        results.append(CheckResult(name=f"wedge2 PR is symmetric at n={n}", passed=bundle.spectrum.symmetric))
    return results


def _rprime_checks(cases) -> List[CheckResult]:
    results = []
    for tag, n in cases:
        bundle = build_bundle(tag, n)
        results.append(check_normalized_minpoly(bundle))
        results.append(check_rprime_closed_form(bundle))
        results.extend(check_rprime_conditions(convert(bundle.rnorm), convert(bundle.rprime)))
    return results


def sym2_rprime_checks() -> List[CheckResult]:
    return _rprime_checks((("sym2", 2), ("sym2", 3)))


def wedge2_rprime_checks() -> List[CheckResult]:
    return _rprime_checks((("wedge2", 4),))


def radical_checks() -> List[CheckResult]:
    results = []
    for n in (2, 3):
        quadratic = radical_basis(vector_rmatrix_star(n), 2)
        results.append(CheckResult(name=f"degree-2 radicals are trivial at n={n}",
                                   passed=not quadratic.right and not quadratic.left))
        cubic = radical_basis(vector_rmatrix_star(n), 3)
        results.extend(cubic.verdicts)
        # n = 2: one cubic and one mirrored element per side
        results.append(CheckResult(
            name=f"degree-3 kernel sizes at n={n}",
            passed=n != 2 or (len(cubic.right), len(cubic.left), cubic.pairing_rank) == (2, 2, 6),
            detail=f"right {len(cubic.right)}, left {len(cubic.left)}, rank {cubic.pairing_rank}"
                   + (", exceeds the cubic q-Serre elements" if cubic.excess else ""),
        ))
    return results


def pairing_checks() -> List[CheckResult]:
    star = vector_rmatrix_star(3)
    den = star.den
    one, q = LaurentScalar.one(den), _q(den, 1)
    full = pairing_matrix(star, 2)
    index = {w: i for i, w in enumerate(full.words)}

    def value(f_word, e_word):
        return full.matrix[index[f_word], index[e_word]]

    results = []
    for k in range(3):
        results.append(_compare(f"<f{k + 1}f{k + 1}, e{k + 1}e{k + 1}>", one + q, value((k, k), (k, k))))
    for m in range(3):
        for n in range(m):
            results.append(_compare(f"<f{m + 1}f{n + 1}, e{m + 1}e{n + 1}>", one + q - q ** -1, value((m, n), (m, n))))
            results.append(_compare(f"<f{n + 1}f{m + 1}, e{m + 1}e{n + 1}>", one, value((n, m), (m, n))))
            results.append(_compare(
                f"coproduct of e{m + 1}e{n + 1}",
                {((n,), (m,)): one, ((m,), (n,)): one + q - q ** -1},
                coproduct_component(star, (m, n), (1, 1)),
            ))
    results.append(_compare("coproduct of e1e1e1", {((0,), (0, 0)): one + q + q ** 2},
                            coproduct_component(star, (0, 0, 0), (1, 2))))
    results.append(CheckResult(name="braided algebra preserves letter content",
                               passed=braided_algebra(star).preserves_content()))
    return results


GROWTH_CASES = {"vector": (2, 3, 4, 5), "sym2": (2, 3, 4), "wedge2": (4, 5)}
RELATION_RANK = {"vector": 3, "sym2": 3, "wedge2": 4}


def cartan_checks() -> List[CheckResult]:
    results = []
    for tag, ranks in GROWTH_CASES.items():
        for n in ranks:
            results.extend(extended_cartan(tag, n).checks)
    return results


def mplus_checks() -> List[CheckResult]:
    results = []
    for tag, n in (("vector", 2), ("vector", 3), ("sym2", 2), ("sym2", 3), ("wedge2", 4)):
        _, checks = verify_mplus_pairing(build_bundle(tag, n))
        results.extend(checks)
    return results


def _family_checks(tag: str) -> List[CheckResult]:
    """Normalization constant at every rank, then the relation instances of one growth step."""
    results = []
    for n in GROWTH_CASES[tag]:
        bundle = build_bundle(tag, n)
        lam_exp = Fraction(-1, n) if tag == "vector" else Fraction(-4, n)
        results.append(_compare(f"lambda for {tag} at n={n}", _q(bundle.den, lam_exp), bundle.lam))
    results.extend(growth_step(tag, RELATION_RANK[tag]).relations)
    return results


def vector_family_checks() -> List[CheckResult]:
    return _family_checks("vector")


def sym2_family_checks() -> List[CheckResult]:
    return _family_checks("sym2")


def wedge2_family_checks() -> List[CheckResult]:
    return _family_checks("wedge2")


def tree_checks() -> List[CheckResult]:
    tree = build_tree(4)
    results = []
    for source, target in (("A1", "B2"), ("A2", "C3"), ("A3", "D4")):
        status = tree.edges[source, target]["status"] if tree.has_edge(source, target) else None
        results.append(_compare(f"tree edge {source} -> {target}", VERIFIED, status))
    return results


# Acceptance suites, in the order "all" runs them.
SUITES: Dict[str, Sequence[CheckBuilder]] = {
    "prop31": (radical_checks, pairing_checks),
    "prop32": (sym2_spectrum_checks, sym2_rprime_checks),
    "prop33": (mplus_checks,),
    "prop34": (wedge2_spectrum_checks, wedge2_rprime_checks),
    "thm31": (star_checks, universal_checks, vector_family_checks),
    "thm32": (sym2_family_checks,),
    "thm33": (wedge2_family_checks,),
    "prop41": (cartan_checks, tree_checks),
}

# Topic names over the same builders.
ALIASES: Dict[str, Sequence[CheckBuilder]] = {
    "star": (star_checks,),
    "universal": (universal_checks,),
    "sym2-spectrum": (sym2_spectrum_checks,),
    "wedge2-spectrum": (wedge2_spectrum_checks,),
    "rprime": (sym2_rprime_checks, wedge2_rprime_checks),
    "radicals": (radical_checks,),
    "pairing": (pairing_checks,),
    "cartan": (cartan_checks,),
    "mplus": (mplus_checks,),
    "relations": (vector_family_checks, sym2_family_checks, wedge2_family_checks),
    "tree": (tree_checks,),
}


@dataclass
class SuiteRunner:
    """
    Runs suites by name; "all" runs every builder of every suite once.

    Each check name is prefixed with the suite that owns its builder, so a
    result read out of "all" or an alias still says which suite it gates.
    """

    suites: Optional[Dict[str, Sequence[CheckBuilder]]] = None
    aliases: Optional[Dict[str, Sequence[CheckBuilder]]] = None

    def __post_init__(self):
        if self.suites is None:
            self.suites = dict(SUITES)
            if self.aliases is None:
                self.aliases = dict(ALIASES)
        if self.aliases is None:
            self.aliases = {}

    def available(self) -> List[str]:
        return list(self.suites) + list(self.aliases) + ["all"]

    def owner(self, builder: CheckBuilder) -> Optional[str]:
        return next((name for name, builders in self.suites.items() if builder in builders), None)

    def builders(self, name: str) -> List[Tuple[Optional[str], CheckBuilder]]:
        """
        (owning suite, builder) pairs in run order, without repeats.

        Raises:
            ValueError: If the suite name is unknown
        """
        if name == "all":
            chosen = [b for builders in self.suites.values() for b in builders]
        elif name in self.suites:
            chosen = list(self.suites[name])
        elif name in self.aliases:
            chosen = list(self.aliases[name])
        else:
            raise ValueError(f"Unknown suite '{name}'. Available: {', '.join(self.available())}")
        unique = list(dict.fromkeys(chosen))
        return [(self.owner(b), b) for b in unique]

    def run(self, name: str) -> SuiteReport:
        """
        Raises:
            ValueError: If the suite name is unknown
        """
        builders = self.builders(name)
        results: List[CheckResult] = []
        started = time.perf_counter()
        for anchor, builder in builders:
            t0 = time.perf_counter()
            try:
                checks = builder()
            except Exception as e:
                logger.exception("Suite stage %s raised", builder.__name__)
                checks = [CheckResult(name=builder.__name__, passed=False, detail=f"{type(e).__name__}: {e}")]
            elapsed = time.perf_counter() - t0
            for check in checks:
                update = {"seconds": round(elapsed / max(len(checks), 1), 6)}
                if anchor:
                    update["name"] = f"{anchor}: {check.name}"
                results.append(check.model_copy(update=update))
            logger.info("Stage %s finished in %.2fs", builder.__name__, elapsed)
        report = SuiteReport(
            suite=name,
            passed=all(r.passed for r in results),
            results=results,
            seconds=round(time.perf_counter() - started, 3),
        )
        for failure in report.failures:
            logger.warning("Check failed: %s", failure.name)
        return report
