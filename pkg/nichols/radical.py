"""
Left and right radicals of the graded pairing and the cubic q-Serre elements.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from exact import LaurentScalar, PolyMatrix, in_span, nullspace
from schemas import CheckResult

from .pairing import pairing_blocks, pairing_matrix
from .words import LinComb, Word, multiply, render_comb

logger = logging.getLogger(__name__)


def cubic_e_element(i: int, j: int, den: int) -> LinComb:
    """(e^i)^2 e^j + q e^j (e^i)^2 - (1 + q) e^i e^j e^i, 1-based letters."""
    a, b = i - 1, j - 1
    q = LaurentScalar.q_power(den, 1)
    one = LaurentScalar.one(den)
    return {(a, a, b): one, (b, a, a): q, (a, b, a): -(one + q)}


def cubic_f_element(i: int, j: int, den: int) -> LinComb:
    """f_j (f_i)^2 + q^-1 (f_i)^2 f_j - (1 + q^-1) f_i f_j f_i, 1-based letters."""
    a, b = i - 1, j - 1
    q_inv = LaurentScalar.q_power(den, -1)
    one = LaurentScalar.one(den)
    return {(b, a, a): one, (a, a, b): q_inv, (a, b, a): -(one + q_inv)}


def mirrored_cubic_element(i: int, j: int, den: int) -> LinComb:
    """
    q x_j x_j x_i - (1 + q) x_j x_i x_j + x_i x_j x_j for i > j, 1-based letters.

    Lies in both radicals: the content block {j, j, i} of the pairing is
    symmetric, so the same coefficients serve for e-words and f-words.
    """
    a, b = i - 1, j - 1
    q = LaurentScalar.q_power(den, 1)
    one = LaurentScalar.one(den)
    return {(b, b, a): q, (b, a, b): -(one + q), (a, b, b): one}


def predicted_elements(m: int, den: int) -> Tuple[List[Tuple[str, LinComb]], List[Tuple[str, LinComb]]]:
    """Named cubic elements for every pair i > j: (e-side list, f-side list)."""
    e_side, f_side = [], []
    for i in range(1, m + 1):
        for j in range(1, i):
            e_side.append((f"cubic e({i},{j})", cubic_e_element(i, j, den)))
            f_side.append((f"cubic f({i},{j})", cubic_f_element(i, j, den)))
    return e_side, f_side


@dataclass(frozen=True)
class RadicalResult:
    degree: int
    words: Tuple[Word, ...]
    right: Tuple[LinComb, ...]
    left: Tuple[LinComb, ...]
    pairing_rank: int
    verdicts: Tuple[CheckResult, ...] = field(default=())
    excess: bool = False


def _lift(vector: List, words: Tuple[Word, ...]) -> LinComb:
    return {w: v for w, v in zip(words, vector) if not v.is_zero}


def pairs_to_zero(matrix: PolyMatrix, words: Tuple[Word, ...], element: LinComb, side: str) -> bool:
    """Whether an e-side (right) or f-side (left) element pairs to zero with everything."""
    index = {w: i for i, w in enumerate(words)}
    vector = {index[w]: v for w, v in element.items()}
    target = matrix if side == "right" else matrix.transpose()
    return not target.apply(vector)


def radical_basis(rmatrix: PolyMatrix, degree: int, cap: Optional[int] = None) -> RadicalResult:
    """
    Kernel bases of the degree-d pairing, computed per content block.

    The right kernel is the e-side radical, the left kernel the f-side one.
    In degree 3 each predicted cubic element and its mirror image gets a
    membership verdict. excess is set when a kernel is larger than the span
    of the predicted cubic elements alone; at n = 2 the mirrored element
    already makes it so.
    """
    blocks = pairing_blocks(rmatrix, degree, cap)
    right: List[LinComb] = []
    left: List[LinComb] = []
    rank = 0
    for block in blocks:
        r_kernel = nullspace(block.matrix, "right")
        l_kernel = nullspace(block.matrix, "left")
        rank += len(block.words) - len(r_kernel)
        right.extend(_lift(v, block.words) for v in r_kernel)
        left.extend(_lift(v, block.words) for v in l_kernel)
    full = pairing_matrix(rmatrix, degree, cap)
    verdicts: List[CheckResult] = []
    excess = False
    if degree == 3:
        m = int(round(len(full.words) ** (1 / 3)))
        e_side, f_side = predicted_elements(m, rmatrix.den)
        for side, elements, kernel in (("right", e_side, right), ("left", f_side, left)):
            for name, element in elements:
                passed = pairs_to_zero(full.matrix, full.words, element, side)
                verdicts.append(CheckResult(
                    name=f"{name} in {side} radical",
                    passed=passed,
                    detail=render_comb(element, "e" if side == "right" else "f"),
                ))
            excess = excess or _has_excess(kernel, [e for _, e in elements], full.words, rmatrix.den)
        for i in range(1, m + 1):
            for j in range(1, i):
                element = mirrored_cubic_element(i, j, rmatrix.den)
                for side, letter in (("right", "e"), ("left", "f")):
                    verdicts.append(CheckResult(
                        name=f"mirrored cubic {letter}({i},{j}) in {side} radical",
                        passed=pairs_to_zero(full.matrix, full.words, element, side),
                        detail=render_comb(element, letter),
                    ))
    logger.info(
        "Degree-%d radical: right %d, left %d, rank %d%s",
        degree, len(right), len(left), rank, " (excess over cubic elements)" if excess else "",
    )
    return RadicalResult(degree, full.words, tuple(right), tuple(left), rank, tuple(verdicts), excess)


def _dense(element: LinComb, words: Tuple[Word, ...], den: int) -> List[LaurentScalar]:
    zero = LaurentScalar.zero(den)
    return [element.get(w, zero) for w in words]


def _has_excess(kernel: List[LinComb], predicted: List[LinComb], words: Tuple[Word, ...], den: int) -> bool:
    rows = [_dense(e, words, den) for e in predicted]
    return any(not in_span(rows, _dense(k, words, den), den) for k in kernel)


def radical_ideal_check(rmatrix: PolyMatrix, element: LinComb, cap: Optional[int] = None) -> CheckResult:
    """e^k x and x e^k pair to zero against all f-words one degree up, for every letter k."""
    degree = len(next(iter(element))) + 1
    full = pairing_matrix(rmatrix, degree, cap)
    m = int(round(len(full.words) ** (1 / degree)))
    one = LaurentScalar.one(rmatrix.den)
    name = f"radical ideal closure in degree {degree}"
    for k in range(m):
        letter = {(k,): one}
        for product, label in ((multiply(letter, element), "left"), (multiply(element, letter), "right")):
            if not pairs_to_zero(full.matrix, full.words, product, "right"):
                return CheckResult(name=name, passed=False,
                                   detail=f"{label} product with e{k + 1} pairs nontrivially",
                                   actual=render_comb(product))
    return CheckResult(name=name, passed=True)
