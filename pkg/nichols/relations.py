"""
Quadratic relations of the braided vector algebra defined by R'.
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple, Union

from exact import LaurentScalar, PolyMatrix, in_span

from .words import BraidedAlgebra, LinComb, Word, render_comb

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuadraticRelations:
    """Degree-2 relation generators over m letters, each a combination equal to zero."""

    m: int
    den: int
    relations: Tuple[LinComb, ...]

    def __len__(self) -> int:
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)

    def words(self) -> List[Word]:
        return [(a, b) for a in range(self.m) for b in range(self.m)]

    def dense(self, comb: LinComb) -> List[LaurentScalar]:
        zero = LaurentScalar.zero(self.den)
        return [comb.get(w, zero) for w in self.words()]

    def implies(self, target: LinComb) -> bool:
        """Whether target = 0 follows from the relations in degree 2."""
        rows = [self.dense(r) for r in self.relations]
        return in_span(rows, self.dense(target), self.den)

    def q_commutation_implied(self, a: int, b: int, exponent) -> bool:
        """Whether e^a e^b = q^exponent e^b e^a follows; letters are 1-based."""
        one = LaurentScalar.one(self.den)
        target: LinComb = {(a - 1, b - 1): one}
        swapped = (b - 1, a - 1)
        target[swapped] = target.get(swapped, LaurentScalar.zero(self.den)) - LaurentScalar.q_power(self.den, exponent)
        return self.implies(target)

    def to_json(self) -> List[List[Tuple[str, dict]]]:
        return [[(".".join(str(x + 1) for x in w), v.to_json()) for w, v in sorted(r.items())] for r in self.relations]

    def render(self) -> List[str]:
        return [render_comb(r) for r in self.relations]


def quadratic_relations(rprime: Union[PolyMatrix, str]) -> QuadraticRelations:
    """
    Relations e^i e^j - sum_{a,b} R'[(j, i), (a, b)] e^a e^b for all i, j.

    Args:
        rprime: R' in the R^{ij}_{kl} index layout

    Returns:
        QuadraticRelations: Nonzero generators, with ones already implied by
        earlier generators dropped

    Raises:
        ValueError: If rprime is the free marker rather than a matrix
    """
    if not isinstance(rprime, PolyMatrix):
        raise ValueError(f"Quadratic relations need an R' matrix, got the marker {rprime!r}")
    algebra = BraidedAlgebra(rprime)
    one = algebra.one
    generators: List[LinComb] = []
    result = QuadraticRelations(algebra.m, algebra.den, ())
    for i in range(algebra.m):
        for j in range(algebra.m):
            comb: LinComb = {(i, j): one}
            for (a, b), value in algebra.psi(i, j):
                key = (a, b)
                comb[key] = comb.get(key, LaurentScalar.zero(algebra.den)) - value
            comb = {w: v for w, v in sorted(comb.items()) if not v.is_zero}
            if not comb:
                continue
            rows = [result.dense(g) for g in generators]
            if generators and in_span(rows, result.dense(comb), algebra.den):
                continue
            generators.append(comb)
    logger.info("Extracted %d quadratic relations over %d letters", len(generators), algebra.m)
    return QuadraticRelations(algebra.m, algebra.den, tuple(generators))
