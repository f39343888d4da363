"""
Weight-basis representations of U_q(sl_n) and the abstract builder.

Builders follow one interface so that the factory can construct any
supported representation by tag, mirroring how R-matrix bundles and growth
steps look representations up.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from exact import LaurentScalar, PolyMatrix, session_denominator
from lattice import Weight

logger = logging.getLogger(__name__)

# sparse vector in V (x) V keyed by (i, j), 0-based
Embedding = Dict[Tuple[int, int], LaurentScalar]


class RepresentationError(ValueError):
    """Raised for unsupported ranks, unstable subspaces or off-lattice exponents."""


@dataclass(frozen=True)
class Rep:
    """
    Immutable weight-basis representation.

    Basis vectors are in canonical (lexicographic) order; act_e[i - 1] and
    act_f[i - 1] are the matrices of E_i and F_i acting on column vectors.
    """

    tag: str
    n: int
    den: int
    labels: Tuple[str, ...]
    weights: Tuple[Weight, ...]
    act_e: Tuple[PolyMatrix, ...]
    act_f: Tuple[PolyMatrix, ...]
    embedding: Optional[Tuple[Embedding, ...]] = None

    @property
    def dim(self) -> int:
        return len(self.labels)

    def E(self, i: int) -> PolyMatrix:
        """Matrix of E_i (1-based)."""
        if not 1 <= i <= self.n - 1:
            raise IndexError(f"Simple index {i} outside 1..{self.n - 1}")
        return self.act_e[i - 1]

    def F(self, i: int) -> PolyMatrix:
        """Matrix of F_i (1-based)."""
        if not 1 <= i <= self.n - 1:
            raise IndexError(f"Simple index {i} outside 1..{self.n - 1}")
        return self.act_f[i - 1]

    @property
    def highest_index(self) -> int:
        return self.dim - 1

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    def to_json(self) -> Dict:
        return {
            "tag": self.tag,
            "n": self.n,
            "labels": list(self.labels),
            "weights": [w.to_json() for w in self.weights],
            "E": [m.to_json() for m in self.act_e],
            "F": [m.to_json() for m in self.act_f],
        }


class RepBuilder(ABC):
    """
    Abstract builder for one family of representations.

    Subclasses declare the smallest supported n and produce the basis data;
    build() validates the result.
    """

    tag: str = ""
    min_n: int = 2
    hypothesis: str = ""

    def __init__(self, n: int, strict: bool = True):
        if n < 2 or (strict and n < self.min_n):
            detail = f" ({self.hypothesis})" if self.hypothesis else ""
            raise RepresentationError(f"{self.tag} requires n ≥ {self.min_n}{detail}, got n={n}")
        self.n = n
        self.den = session_denominator(n)
        logger.debug("Initializing %s for n=%d", self.__class__.__name__, n)

    @abstractmethod
    def build(self) -> Rep:
        """Construct the representation."""
        raise NotImplementedError("Subclasses must implement build method")

    def _validate(self, rep: Rep) -> Rep:
        if len(set(rep.weights)) != rep.dim:
            raise RepresentationError(f"{rep.tag} weights are not distinct")
        for i in range(1, rep.n):
            if not rep.E(i).is_lower_triangular(strict=True):
                raise RepresentationError(f"E_{i} does not raise the basis index in {rep.tag}")
            if not rep.F(i).is_upper_triangular(strict=True):
                raise RepresentationError(f"F_{i} does not lower the basis index in {rep.tag}")
        logger.info("Built %s representation for n=%d: dim %d", rep.tag, rep.n, rep.dim)
        return rep
