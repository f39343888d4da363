"""
The vector representation of U_q(sl_n).
"""

import logging

from exact import LaurentScalar, PolyMatrix
from lattice import epsilon_bar

from .base import Rep, RepBuilder

logger = logging.getLogger(__name__)


class VectorRepBuilder(RepBuilder):
    """x_1, ..., x_n with E_i x_i = x_{i+1}, F_i x_{i+1} = x_i and wt(x_i) = -epsilon_i."""

    tag = "vector"
    min_n = 2

    def build(self) -> Rep:
        n, den = self.n, self.den
        one = LaurentScalar.one(den)
        act_e = tuple(PolyMatrix(n, n, den, {(i, i - 1): one}) for i in range(1, n))
        act_f = tuple(PolyMatrix(n, n, den, {(i - 1, i): one}) for i in range(1, n))
        weights = tuple(-epsilon_bar(n, i) for i in range(1, n + 1))
        labels = tuple(f"x{i}" for i in range(1, n + 1))
        return self._validate(Rep(self.tag, n, den, labels, weights, act_e, act_f))


def vector_rep(n: int) -> Rep:
    """Vector representation; n >= 2."""
    return VectorRepBuilder(n).build()
