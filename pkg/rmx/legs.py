"""
Two-leg operators on tensor powers V^(x k).

Tensor vectors are sparse dicts keyed by index tuples (0-based letters). A
two-leg operator acting on legs (a, b) reads its first factor from leg a and
its second from leg b, so legs need not be adjacent.
"""

import logging
from typing import Dict, List, Sequence, Tuple

from exact import LaurentScalar, PolyMatrix

logger = logging.getLogger(__name__)

TensorVector = Dict[Tuple[int, ...], object]
LegOperator = Tuple[PolyMatrix, Tuple[int, int]]


def apply_on_legs(op: PolyMatrix, d: int, vector: TensorVector, legs: Tuple[int, int]) -> TensorVector:
    a, b = legs
    acc: TensorVector = {}
    for key, x in vector.items():
        for row, value in op.column(key[a] * d + key[b]):
            c, e = divmod(row, d)
            new = list(key)
            new[a], new[b] = c, e
            new_key = tuple(new)
            term = value * x
            acc[new_key] = acc[new_key] + term if new_key in acc else term
    return {k: v for k, v in acc.items() if not v.is_zero}


def apply_word(word: Sequence[LegOperator], d: int, vector: TensorVector) -> TensorVector:
    """Apply a product of leg operators; the rightmost factor acts first."""
    for op, legs in reversed(word):
        vector = apply_on_legs(op, d, vector, legs)
    return vector


def flat_index(key: Sequence[int], d: int) -> int:
    index = 0
    for letter in key:
        index = index * d + letter
    return index


def unflatten(index: int, d: int, nlegs: int) -> Tuple[int, ...]:
    letters: List[int] = []
    for _ in range(nlegs):
        index, letter = divmod(index, d)
        letters.append(letter)
    return tuple(reversed(letters))


def leg_matrix(op: PolyMatrix, d: int, legs: Tuple[int, int], nlegs: int) -> PolyMatrix:
    """Full matrix of a two-leg operator on V^(x nlegs)."""
    size = d ** nlegs
    one = LaurentScalar.one(op.den)
    columns = []
    for col in range(size):
        image = apply_on_legs(op, d, {unflatten(col, d, nlegs): one}, legs)
        columns.append({flat_index(k, d): v for k, v in image.items()})
    return PolyMatrix.from_columns(columns, size, op.den)


def word_matrix(word: Sequence[LegOperator], d: int, nlegs: int) -> PolyMatrix:
    result = None
    for op, legs in word:
        factor = leg_matrix(op, d, legs, nlegs)
        result = factor if result is None else result @ factor
    return result


def render_key(key: Sequence[int]) -> str:
    """1-based multi-index, e.g. (1,2,1)."""
    return "(" + ",".join(str(k + 1) for k in key) + ")"