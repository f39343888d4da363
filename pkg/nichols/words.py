"""
Braided words: the braiding on tensor words and the braided coproduct.

Words are tuples of 0-based letters; linear combinations are dicts from
words to exact scalars. The braiding is read from an R-matrix in the
R^{ij}_{kl} index layout: Psi(e^i (x) e^j) = sum_{a,b} R[(j, i), (a, b)] e^a (x) e^b.
"""

import logging
from functools import lru_cache
from typing import Dict, List, Mapping, Sequence, Tuple

from exact import LaurentScalar, PolyMatrix

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
LinComb = Dict[Word, object]
DoubleComb = Dict[Tuple[Word, Word], object]


def _accumulate(target: Dict, key, value) -> None:
    if key in target:
        target[key] = target[key] + value
    else:
        target[key] = value


def _clean(comb: Dict) -> Dict:
    return {k: v for k, v in sorted(comb.items()) if not v.is_zero}


def render_word(word: Word, prefix: str = "e") -> str:
    """1-based rendering, e.g. e2.e2.e1; the empty word is 1."""
    if not word:
        return "1"
    return ".".join(f"{prefix}{letter + 1}" for letter in word)


def render_comb(comb: Mapping[Word, object], prefix: str = "e") -> str:
    if not comb:
        return "0"
    return " + ".join(f"({value})*{render_word(word, prefix)}" for word, value in sorted(comb.items()))


class BraidedAlgebra:
    """Free braided algebra on m letters with the braiding of an R-matrix."""

    def __init__(self, rmatrix: PolyMatrix):
        if not rmatrix.is_square():
            raise ValueError(f"Braiding matrix must be square, got {rmatrix.shape}")
        m = 1
        while m * m < rmatrix.nrows:
            m += 1
        if m * m != rmatrix.nrows:
            raise ValueError(f"Braiding matrix size {rmatrix.nrows} is not a perfect square")
        self.rmatrix = rmatrix
        self.m = m
        self.den = rmatrix.den
        self._psi: Dict[Tuple[int, int], List[Tuple[Tuple[int, int], object]]] = {}
        self._coproduct: Dict[Tuple[Word, int], DoubleComb] = {}

    @property
    def one(self) -> LaurentScalar:
        return LaurentScalar.one(self.den)

    def psi(self, i: int, j: int) -> List[Tuple[Tuple[int, int], object]]:
        """Psi(e^i (x) e^j) as a list of ((a, b), coefficient)."""
        key = (i, j)
        if key not in self._psi:
            self._psi[key] = [(divmod(col, self.m), value) for col, value in self.rmatrix.row(j * self.m + i)]
        return self._psi[key]

    def preserves_content(self) -> bool:
        """Whether Psi(e^i (x) e^j) only involves the letters i and j."""
        for r, c, _ in self.rmatrix.entries():
            if sorted(divmod(r, self.m)) != sorted(divmod(c, self.m)):
                return False
        return True

    def check_word(self, word: Word) -> None:
        for letter in word:
            if not 0 <= letter < self.m:
                raise ValueError(f"Letter {letter + 1} outside alphabet 1..{self.m}")

    def braid_apply(self, comb: Mapping[Word, object], pos: int) -> LinComb:
        """
        Apply Psi at positions (pos, pos + 1), 1-based.

        Raises:
            ValueError: If pos is out of range for some word
        """
        out: LinComb = {}
        for word, coeff in comb.items():
            if not 1 <= pos <= len(word) - 1:
                raise ValueError(f"Braid position {pos} outside 1..{len(word) - 1}")
            i, j = word[pos - 1], word[pos]
            for (a, b), value in self.psi(i, j):
                _accumulate(out, word[: pos - 1] + (a, b) + word[pos + 1:], value * coeff)
        return _clean(out)

    def letter_past(self, letter: int, word: Word) -> List[Tuple[Word, int, object]]:
        """Psi(e^letter (x) word) as (word', letter', coefficient) with word' (x) e^letter'."""
        comb: LinComb = {(letter,) + word: self.one}
        for pos in range(1, len(word) + 1):
            comb = self.braid_apply(comb, pos)
        return [(w[:-1], w[-1], v) for w, v in comb.items()]

    def coproduct_component(self, word: Word, k: int) -> DoubleComb:
        """
        The (k, d - k) component of the braided coproduct of a word.

        Delta(e^i w') = (e^i (x) 1 + 1 (x) e^i) Delta(w') with
        (a (x) b)(c (x) d) = a Psi(b (x) c)_(1) (x) Psi(b (x) c)_(2) d.

        Raises:
            ValueError: If k is outside 0..len(word)
        """
        d = len(word)
        if not 0 <= k <= d:
            raise ValueError(f"Invalid split ({k}, {d - k}) for a degree-{d} word")
        key = (word, k)
        if key in self._coproduct:
            return self._coproduct[key]
        if k == 0:
            result = {((), word): self.one}
        elif k == d:
            result = {(word, ()): self.one}
        else:
            head, rest = word[0], word[1:]
            acc: DoubleComb = {}
            # e^head (x) 1 times the (k - 1, d - k) part
            for (left, right), value in self.coproduct_component(rest, k - 1).items():
                _accumulate(acc, ((head,) + left, right), value)
            # 1 (x) e^head times the (k, d - 1 - k) part
            for (left, right), value in self.coproduct_component(rest, k).items():
                for moved, letter, coeff in self.letter_past(head, left):
                    _accumulate(acc, (moved, (letter,) + right), coeff * value)
            result = _clean(acc)
        self._coproduct[key] = result
        return result

    def words(self, degree: int) -> List[Word]:
        """All words of a degree in lexicographic order."""
        out: List[Word] = [()]
        for _ in range(degree):
            out = [w + (letter,) for w in out for letter in range(self.m)]
        return out


@lru_cache(maxsize=16)
def braided_algebra(rmatrix: PolyMatrix) -> BraidedAlgebra:
    return BraidedAlgebra(rmatrix)


def braid_apply(rmatrix: PolyMatrix, comb: Mapping[Word, object], pos: int) -> LinComb:
    """Psi at positions (pos, pos + 1) of a linear combination of words."""
    algebra = braided_algebra(rmatrix)
    for word in comb:
        algebra.check_word(word)
    return algebra.braid_apply(comb, pos)


def coproduct_component(rmatrix: PolyMatrix, word: Sequence[int], split: Tuple[int, int]) -> DoubleComb:
    """
    Raises:
        ValueError: If the split does not add up to the word length
    """
    word = tuple(word)
    if split[0] + split[1] != len(word) or min(split) < 0:
        raise ValueError(f"Invalid split {split} for a degree-{len(word)} word")
    algebra = braided_algebra(rmatrix)
    algebra.check_word(word)
    return algebra.coproduct_component(word, split[0])


def multiply(*combs: Mapping[Word, object]) -> LinComb:
    """Product in the free algebra: concatenation, extended bilinearly."""
    if not combs:
        raise ValueError("multiply needs at least one factor")
    result: LinComb = dict(combs[0])
    for comb in combs[1:]:
        out: LinComb = {}
        for left, a in result.items():
            for right, b in comb.items():
                _accumulate(out, left + right, a * b)
        result = out
    return _clean(result)


def coassociativity_check(rmatrix: PolyMatrix, word: Sequence[int]) -> bool:
    """(1, d-1) then (1, d-2) on the right equals (2, d-2) then (1, 1) on the left."""
    word = tuple(word)
    algebra = braided_algebra(rmatrix)
    via_right: Dict[Tuple[Word, Word, Word], object] = {}
    for (x, y), a in algebra.coproduct_component(word, 1).items():
        for (y1, y2), b in algebra.coproduct_component(y, 1).items():
            _accumulate(via_right, (x, y1, y2), a * b)
    via_left: Dict[Tuple[Word, Word, Word], object] = {}
    for (u, v), a in algebra.coproduct_component(word, 2).items():
        for (u1, u2), b in algebra.coproduct_component(u, 1).items():
            _accumulate(via_left, (u1, u2, v), a * b)
    return _clean(via_right) == _clean(via_left)
