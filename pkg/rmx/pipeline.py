"""
Full R-matrix pipeline: construct, take the spectrum, normalize.
"""

import logging
from dataclasses import replace
from functools import lru_cache
from typing import Optional

from exact import LaurentScalar
from qrep import RepFactory
from schemas import CheckResult

from .bundle import RMatrixBundle
from .cabling import CABLE_TAGS, cable_rmatrix
from .spectrum import (
    check_normalized_minpoly,
    check_rprime_closed_form,
    check_triangular,
    normalize_and_rprime,
    spectrum,
)
from .star import convert, vector_rmatrix_star
from .universal import universal_r_vector

logger = logging.getLogger(__name__)


def vector_bundle(n: int) -> RMatrixBundle:
    """Bundle for the vector representation, R_VV from the universal R."""
    return RMatrixBundle(rep=RepFactory.create("vector", n), rvv=universal_r_vector(n))


def check_universal_oracle(n: int) -> CheckResult:
    """Universal R on V (x) V equals q^(-1/n) times the star matrix, after conversion."""
    name = f"universal R agrees with the star matrix at n={n}"
    star = vector_rmatrix_star(n)
    expected = convert(star).scale(LaurentScalar.q_power(star.den, f"-1/{n}"))
    diff = expected.first_difference(universal_r_vector(n))
    if diff is None:
        return CheckResult(name=name, passed=True)
    row, col, a, b = diff
    return CheckResult(name=name, passed=False, detail="entry mismatch", location=f"({row}, {col})",
                       expected=str(a), actual=str(b))


def with_checks(bundle: RMatrixBundle, *checks: Optional[CheckResult]) -> RMatrixBundle:
    return replace(bundle, checks=bundle.checks + tuple(c for c in checks if c is not None))


@lru_cache(maxsize=32)
def build_bundle(tag: str, n: int) -> RMatrixBundle:
    """
    Run every stage for one representation.

    Args:
        tag: "vector", "sym2" or "wedge2"
        n: Rank parameter

    Returns:
        RMatrixBundle: With spectrum, lambda, Rnorm, R' and the checks of
            triangularity, the normalized minimal polynomial and the R' closed form

    Raises:
        ValueError: If tag is not supported
        RepresentationError: If n is out of range for the family
    """
    tag = tag.lower()
    RepFactory.builder(tag)
    if tag in CABLE_TAGS:
        bundle = cable_rmatrix(n, tag)
    else:
        bundle = vector_bundle(n)
    bundle = normalize_and_rprime(spectrum(bundle))
    bundle = with_checks(
        bundle,
        check_triangular(bundle),
        check_normalized_minpoly(bundle),
        check_rprime_closed_form(bundle),
    )
    logger.info("Built %s bundle for n=%d", tag, n)
    return bundle
