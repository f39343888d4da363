"""
Quantum symmetric and exterior squares of the vector representation.

Both are realized inside V (x) V as eigenspaces of the braiding and inherit
the coproduct action; restriction checks stability exactly.
"""

import logging
from abc import abstractmethod
from typing import Dict, List, Tuple

from exact import LaurentScalar, PolyMatrix

from .base import Embedding, Rep, RepBuilder, RepresentationError
from .torus import tensor_action
from .vector import vector_rep

logger = logging.getLogger(__name__)


class TensorSquareBuilder(RepBuilder):
    """Subrepresentation of V (x) V spanned by explicit basis vectors."""

    @abstractmethod
    def basis(self) -> List[Tuple[str, Tuple[int, int], Embedding]]:
        """(label, pivot pair, embedding) per basis vector in canonical order."""
        raise NotImplementedError("Subclasses must implement basis method")

    def build(self) -> Rep:
        n, den = self.n, self.den
        vec = vector_rep(n)
        es, fs = tensor_action(vec, vec)
        basis = self.basis()
        act_e = tuple(restrict(m, basis, n, den, f"E_{i + 1}", self.tag) for i, m in enumerate(es))
        act_f = tuple(restrict(m, basis, n, den, f"F_{i + 1}", self.tag) for i, m in enumerate(fs))
        weights = tuple(vec.weights[a] + vec.weights[b] for _, (a, b), _ in basis)
        labels = tuple(label for label, _, _ in basis)
        embedding = tuple(emb for _, _, emb in basis)
        return self._validate(Rep(self.tag, n, den, labels, weights, act_e, act_f, embedding))


def flatten(embedding: Embedding, n: int) -> Dict[int, LaurentScalar]:
    return {a * n + b: v for (a, b), v in embedding.items()}


def restrict(
    matrix: PolyMatrix,
    basis: List[Tuple[str, Tuple[int, int], Embedding]],
    n: int,
    den: int,
    name: str,
    tag: str,
) -> PolyMatrix:
    """
    Matrix of an operator on V (x) V restricted to a spanned subspace.

    Each basis vector has coefficient 1 at its pivot pair and every other
    basis vector vanishes there, so coordinates are read at pivots.

    Raises:
        RepresentationError: If the subspace is not stable
    """
    pivots = [a * n + b for _, (a, b), _ in basis]
    flats = [flatten(emb, n) for _, _, emb in basis]
    entries = {}
    for col, vector in enumerate(flats):
        image = matrix.apply(vector)
        rebuilt: Dict[int, LaurentScalar] = {}
        for row, pivot in enumerate(pivots):
            coeff = image.get(pivot)
            if coeff is None:
                continue
            entries[(row, col)] = coeff
            for key, value in flats[row].items():
                term = coeff * value
                rebuilt[key] = rebuilt[key] + term if key in rebuilt else term
        rebuilt = {k: v for k, v in rebuilt.items() if not v.is_zero}
        if rebuilt != image:
            raise RepresentationError(f"{tag} subspace is not stable under {name} (basis vector {col})")
    return PolyMatrix(len(basis), len(basis), den, entries)


class Sym2RepBuilder(TensorSquareBuilder):
    """x_m (x) x_m and x_i (x) x_j + q^-1 x_j (x) x_i (i < j), lexicographic."""

    tag = "sym2"
    min_n = 2

    def basis(self) -> List[Tuple[str, Tuple[int, int], Embedding]]:
        one = LaurentScalar.one(self.den)
        q_inv = LaurentScalar.q_power(self.den, -1)
        out = []
        for i in range(self.n):
            for j in range(i, self.n):
                if i == j:
                    emb = {(i, i): one}
                else:
                    emb = {(i, j): one, (j, i): q_inv}
                out.append((f"x{i + 1}.x{j + 1}", (i, j), emb))
        return out


class Wedge2RepBuilder(TensorSquareBuilder):
    """x_i ^ x_j = x_i (x) x_j - q x_j (x) x_i (i < j), lexicographic."""

    tag = "wedge2"
    min_n = 4
    hypothesis = "the exterior-square decomposition holds when n ≥ 4"

    def basis(self) -> List[Tuple[str, Tuple[int, int], Embedding]]:
        one = LaurentScalar.one(self.den)
        minus_q = LaurentScalar.q_power(self.den, 1, -1)
        out = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                out.append((f"x{i + 1}^x{j + 1}", (i, j), {(i, j): one, (j, i): minus_q}))
        return out


def sym2_rep(n: int) -> Rep:
    """Quantum symmetric square; n >= 2."""
    return Sym2RepBuilder(n).build()


def wedge2_rep(n: int) -> Rep:
    """Quantum exterior square; n >= 4."""
    return Wedge2RepBuilder(n).build()


def raw_wedge2_rep(n: int) -> Rep:
    """Exterior square without the rank hypothesis (n >= 2), for decomposition checks."""
    return Wedge2RepBuilder(n, strict=False).build()
