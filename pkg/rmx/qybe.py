"""
Yang-Baxter, braid and R' compatibility checks.

Checks never raise on a failed identity; they return CheckResult records with
the first discrepancy located. Exhaustive mode compares full matrices on
V^(x3); probe mode applies both sides to standard basis vectors chosen by a
fixed stride.
"""

import logging
from typing import List, Optional, Sequence

from config import settings
from exact import DimensionMismatchError, LaurentScalar, PolyMatrix
from schemas import CheckResult

from .legs import LegOperator, apply_word, render_key, unflatten, word_matrix
from .star import side_dimension

logger = logging.getLogger(__name__)

EXHAUSTIVE = "exhaustive"
PROBE = "probe"


def resolve_mode(d: int, mode: Optional[str] = None) -> str:
    """
    Pick the checking mode for a d-dimensional factor.

    Raises:
        ValueError: For an unknown mode or exhaustive mode above the configured limit
    """
    limit = settings.QYBE_EXHAUSTIVE_MAX_DIM
    if mode is None:
        return EXHAUSTIVE if d <= limit else PROBE
    if mode not in (EXHAUSTIVE, PROBE):
        raise ValueError(f"Unknown check mode '{mode}'. Available: {EXHAUSTIVE}, {PROBE}")
    if mode == EXHAUSTIVE and d > limit:
        raise ValueError(f"Exhaustive mode allowed only for d <= {limit}, got d={d}")
    return mode


def probe_indices(size: int, count: Optional[int] = None) -> List[int]:
    count = count or settings.QYBE_PROBE_COUNT
    stride = max(1, size // count)
    return sorted({min(t * stride, size - 1) for t in range(count)})


def compare_words(
    name: str,
    left: Sequence[LegOperator],
    right: Sequence[LegOperator],
    d: int,
    nlegs: int,
    mode: str,
) -> CheckResult:
    """Compare two products of leg operators on V^(x nlegs)."""
    if mode == EXHAUSTIVE:
        diff = word_matrix(left, d, nlegs).first_difference(word_matrix(right, d, nlegs))
        if diff is None:
            return CheckResult(name=name, passed=True, detail=f"exhaustive on dimension {d ** nlegs}")
        row, col, a, b = diff
        location = f"row {render_key(unflatten(row, d, nlegs))}, column {render_key(unflatten(col, d, nlegs))}"
        logger.warning("%s fails at %s: %s vs %s", name, location, a, b)
        return CheckResult(name=name, passed=False, detail="entry mismatch", location=location,
                           expected=str(a), actual=str(b))
    den = left[0][0].den
    one = LaurentScalar.one(den)
    probes = probe_indices(d ** nlegs)
    for index in probes:
        key = unflatten(index, d, nlegs)
        lhs = apply_word(left, d, {key: one})
        rhs = apply_word(right, d, {key: one})
        if lhs == rhs:
            continue
        for out in sorted(set(lhs) | set(rhs)):
            a = lhs.get(out, LaurentScalar.zero(den))
            b = rhs.get(out, LaurentScalar.zero(den))
            if a != b:
                location = f"probe {render_key(key)}, component {render_key(out)}"
                logger.warning("%s fails at %s: %s vs %s", name, location, a, b)
                return CheckResult(name=name, passed=False, detail="probe mismatch", location=location,
                                   expected=str(a), actual=str(b))
    return CheckResult(name=name, passed=True, detail=f"{len(probes)} probes on dimension {d ** nlegs}")


def check_qybe(r: PolyMatrix, mode: Optional[str] = None) -> CheckResult:
    """
    R12 R13 R23 = R23 R13 R12 on V^(x3).

    Args:
        r: Square matrix of size d^2
        mode: "exhaustive", "probe" or None for the configured policy

    Raises:
        ValueError: If the size is not a perfect square or the mode is not allowed
    """
    d = side_dimension(r)
    mode = resolve_mode(d, mode)
    left = [(r, (0, 1)), (r, (0, 2)), (r, (1, 2))]
    right = [(r, (1, 2)), (r, (0, 2)), (r, (0, 1))]
    return compare_words("quantum Yang-Baxter equation", left, right, d, 3, mode)


def check_braid_relation(braid: PolyMatrix, mode: Optional[str] = None) -> CheckResult:
    """Rb_1 Rb_2 Rb_1 = Rb_2 Rb_1 Rb_2 for a braid operator Rb = P R."""
    d = side_dimension(braid)
    mode = resolve_mode(d, mode)
    left = [(braid, (0, 1)), (braid, (1, 2)), (braid, (0, 1))]
    right = [(braid, (1, 2)), (braid, (0, 1)), (braid, (1, 2))]
    return compare_words("braid relation", left, right, d, 3, mode)


def check_rprime_conditions(r: PolyMatrix, rprime: PolyMatrix, mode: Optional[str] = None) -> List[CheckResult]:
    """
    Compatibility of R' with R, both in the R^{ij}_{kl} index layout.

    (i) R12 R13 R'23 = R'23 R13 R12 and R23 R13 R'12 = R'12 R13 R23
    (ii) (PR + 1)(PR' - 1) = 0
    (iii) R21 R'12 = R'21 R12

    Raises:
        DimensionMismatchError: If R and R' differ in size
    """
    if r.shape != rprime.shape:
        raise DimensionMismatchError(f"R is {r.shape} but R' is {rprime.shape}")
    d = side_dimension(r)
    mode = resolve_mode(d, mode)
    results = [
        compare_words(
            "mixed Yang-Baxter R12 R13 R'23",
            [(r, (0, 1)), (r, (0, 2)), (rprime, (1, 2))],
            [(rprime, (1, 2)), (r, (0, 2)), (r, (0, 1))],
            d, 3, mode,
        ),
        compare_words(
            "mixed Yang-Baxter R23 R13 R'12",
            [(r, (1, 2)), (r, (0, 2)), (rprime, (0, 1))],
            [(rprime, (0, 1)), (r, (0, 2)), (r, (1, 2))],
            d, 3, mode,
        ),
    ]
    p = PolyMatrix.flip(d, r.den)
    identity = PolyMatrix.identity(d * d, r.den)
    annihilation = (p @ r + identity) @ (p @ rprime - identity)
    results.append(_zero_check("quadratic annihilation (PR + 1)(PR' - 1)", annihilation, d))
    exchange = (p @ r @ p) @ rprime - (p @ rprime @ p) @ r
    results.append(_zero_check("exchange R21 R'12 = R'21 R12", exchange, d))
    return results


def _zero_check(name: str, matrix: PolyMatrix, d: int) -> CheckResult:
    if matrix.is_zero:
        return CheckResult(name=name, passed=True, detail=f"exact on dimension {d * d}")
    row, col, value = matrix.entries()[0]
    location = f"row {render_key(unflatten(row, d, 2))}, column {render_key(unflatten(col, d, 2))}"
    logger.warning("%s fails at %s", name, location)
    return CheckResult(name=name, passed=False, detail="nonzero residual", location=location,
                       expected="0", actual=str(value))
