"""
Graded dual pairing between f-words and e-words.

<f_j1 ... f_jd, w_e> = sum over the (1, d - 1) coproduct component
e^x (x) rest of w_e of delta(j1, x) <f_j2 ... f_jd, rest>, with
<f_j, e^i> = delta_ij. When the braiding preserves letter content the
pairing vanishes between words of different content, so it is computed
block by block.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from config import settings
from exact import LaurentScalar, PolyMatrix

from .words import BraidedAlgebra, Word, braided_algebra

logger = logging.getLogger(__name__)


class SizeCapExceeded(ValueError):
    """Raised when a pairing matrix would exceed the configured size cap."""


@dataclass(frozen=True)
class PairingMatrix:
    """Degree-d pairing; rows are f-words, columns e-words, both lexicographic."""

    degree: int
    words: Tuple[Word, ...]
    matrix: PolyMatrix

    @property
    def dim(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class PairingBlock:
    content: Tuple[int, ...]
    words: Tuple[Word, ...]
    matrix: PolyMatrix


def check_size(m: int, degree: int, cap: Optional[int] = None) -> None:
    """
    Raises:
        SizeCapExceeded: If m^degree is above the cap
    """
    cap = settings.QGROW_SIZE_CAP if cap is None else cap
    if m ** degree > cap:
        raise SizeCapExceeded(f"Pairing of degree {degree} over {m} letters has {m ** degree} words, cap is {cap}")


class Pairing:
    """Memoized pairing values for one braided algebra."""

    def __init__(self, algebra: BraidedAlgebra):
        self.algebra = algebra
        self.content_blocks = algebra.preserves_content()
        self._values: Dict[Tuple[Word, Word], LaurentScalar] = {}

    def value(self, f_word: Word, e_word: Word):
        if len(f_word) != len(e_word):
            return LaurentScalar.zero(self.algebra.den)
        if self.content_blocks and sorted(f_word) != sorted(e_word):
            return LaurentScalar.zero(self.algebra.den)
        key = (f_word, e_word)
        if key in self._values:
            return self._values[key]
        if not f_word:
            result = self.algebra.one
        elif len(f_word) == 1:
            result = self.algebra.one if f_word == e_word else LaurentScalar.zero(self.algebra.den)
        else:
            result = LaurentScalar.zero(self.algebra.den)
            for (first, rest), coeff in self.algebra.coproduct_component(e_word, 1).items():
                if first[0] == f_word[0]:
                    result = result + coeff * self.value(f_word[1:], rest)
        self._values[key] = result
        return result

    def block(self, words: List[Word]) -> PolyMatrix:
        size = len(words)
        entries = {}
        for r, f_word in enumerate(words):
            for c, e_word in enumerate(words):
                entries[(r, c)] = self.value(f_word, e_word)
        return PolyMatrix(size, size, self.algebra.den, entries)


@lru_cache(maxsize=16)
def _pairing(rmatrix: PolyMatrix) -> Pairing:
    return Pairing(braided_algebra(rmatrix))


def pairing_matrix(rmatrix: PolyMatrix, degree: int, cap: Optional[int] = None) -> PairingMatrix:
    """
    Full degree-d pairing matrix.

    Args:
        rmatrix: Braiding R-matrix in the R^{ij}_{kl} layout
        degree: d >= 1
        cap: Override for the m^d size cap

    Raises:
        ValueError: If degree < 1
        SizeCapExceeded: If m^d is above the cap
    """
    if degree < 1:
        raise ValueError(f"Pairing degree must be at least 1, got {degree}")
    pairing = _pairing(rmatrix)
    algebra = pairing.algebra
    check_size(algebra.m, degree, cap)
    words = algebra.words(degree)
    index = {w: i for i, w in enumerate(words)}
    entries = {}
    for block in pairing_blocks(rmatrix, degree, cap):
        for r, c, value in block.matrix.entries():
            entries[(index[block.words[r]], index[block.words[c]])] = value
    logger.info("Built degree-%d pairing over %d letters", degree, algebra.m)
    return PairingMatrix(degree, tuple(words), PolyMatrix(len(words), len(words), algebra.den, entries))


def pairing_blocks(rmatrix: PolyMatrix, degree: int, cap: Optional[int] = None) -> List[PairingBlock]:
    """Pairing split by letter content (a single block if the braiding mixes letters)."""
    pairing = _pairing(rmatrix)
    algebra = pairing.algebra
    check_size(algebra.m, degree, cap)
    groups: Dict[Tuple[int, ...], List[Word]] = defaultdict(list)
    for word in algebra.words(degree):
        content = tuple(sorted(word)) if pairing.content_blocks else ()
        groups[content].append(word)
    blocks = []
    for content in sorted(groups):
        words = groups[content]
        blocks.append(PairingBlock(content, tuple(words), pairing.block(words)))
        logger.debug("Pairing block %s has size %d", content, len(words))
    return blocks
