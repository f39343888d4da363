"""
The full growth pipeline for one (representation, n).
"""

import logging
from dataclasses import replace
from functools import lru_cache

from rmx import build_bundle, check_rprime_conditions, convert
from schemas import CheckResult

from .growth import GrowthError, GrowthResult, extended_cartan
from .instances import relation_instances
from .mplus import MPlusError, verify_mplus_pairing

logger = logging.getLogger(__name__)


@lru_cache(maxsize=32)
def growth_step(tag: str, n: int) -> GrowthResult:
    """
    Bundle, m+ verification, extended Cartan matrix and relation instances.

    Args:
        tag: "vector", "sym2" or "wedge2"
        n: Rank of the grown algebra

    Returns:
        GrowthResult: With the m+ convention, checks and relation instances

    Raises:
        GrowthError: If the m+ entries fit no single convention or the
            Cartan routes disagree
        RepresentationError: If n is out of range for the family
    """
    bundle = build_bundle(tag, n)
    try:
        convention, mplus_checks = verify_mplus_pairing(bundle)
    except MPlusError as e:
        raise GrowthError(str(e)) from e
    result = extended_cartan(tag, n, bundle)
    checks = list(result.checks) + mplus_checks
    if not bundle.is_free:
        checks.extend(check_rprime_conditions(convert(bundle.rnorm), convert(bundle.rprime)))
    else:
        checks.append(CheckResult(name=f"R' = P for {bundle.rep.tag} at n={n}", passed=True))
    relations = relation_instances(result, bundle)
    result = replace(result, convention=str(convention), checks=tuple(checks), relations=tuple(relations))
    logger.info("Grew %s from %s via %s: %s", result.target, result.source, result.tag,
                "all checks pass" if result.passed else "checks failed")
    return result
