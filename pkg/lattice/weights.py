"""
Weights of A_{n-1} in the simple-root basis.

A weight is sum c_i alpha_i plus an optional central component v that is
orthogonal to every alpha_i and has a declared norm (v, v). Central
components with different keys are orthogonal to each other.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Sequence, Tuple, Union

from .cartan import CartanMatrix, cartan_matrix, inverse_cartan_a

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction, str]


@dataclass(frozen=True)
class RootDatum:
    """Simple-root data: Cartan matrix and squared lengths (alpha_i, alpha_i)."""

    rank: int
    cartan: CartanMatrix
    lengths: Tuple[Fraction, ...]

    def gram(self, i: int, j: int) -> Fraction:
        """(alpha_i, alpha_j) = d_i a_ij with d_i = (alpha_i, alpha_i)/2 (0-based)."""
        return self.lengths[i] * self.cartan[i][j] / 2

    def to_json(self) -> Dict:
        return {
            "rank": self.rank,
            "cartan": [list(row) for row in self.cartan],
            "lengths": [_fmt(x) for x in self.lengths],
        }


@lru_cache(maxsize=32)
def type_a(n: int) -> RootDatum:
    """Root datum of A_{n-1} (the Lie algebra sl_n)."""
    if n < 2:
        raise ValueError(f"A_(n-1) needs n >= 2, got {n}")
    return RootDatum(n - 1, cartan_matrix("A", n - 1), tuple(Fraction(2) for _ in range(n - 1)))


@dataclass(frozen=True)
class Weight:
    """Immutable weight sum c_i alpha_i (+ central component)."""

    coords: Tuple[Fraction, ...]
    central: Fraction = Fraction(0)
    central_key: str = ""
    _datum: RootDatum = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))
        object.__setattr__(self, "central", Fraction(self.central))
        if self._datum is None:
            object.__setattr__(self, "_datum", type_a(len(self.coords) + 1))

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def n(self) -> int:
        return len(self.coords) + 1

    def _check(self, other: "Weight") -> None:
        if self.rank != other.rank:
            raise ValueError(f"Rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        if self.central_key and other.central_key and self.central_key != other.central_key:
            raise ValueError("Cannot add weights with distinct central generators")
        return Weight(
            tuple(a + b for a, b in zip(self.coords, other.coords)),
            self.central if self.central_key else other.central,
            self.central_key or other.central_key,
        )

    def __neg__(self) -> "Weight":
        if self.central_key:
            raise ValueError("Negating a central component is not supported")
        return Weight(tuple(-c for c in self.coords))

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def scale(self, factor: Rational) -> "Weight":
        if self.central_key:
            raise ValueError("Scaling a central component is not supported")
        return Weight(tuple(c * Fraction(factor) for c in self.coords))

    def root_part(self) -> "Weight":
        return Weight(self.coords)

    @property
    def is_zero(self) -> bool:
        return not self.central_key and all(c == 0 for c in self.coords)

    def height(self) -> Fraction:
        return sum(self.coords, Fraction(0))

    def to_json(self) -> Dict:
        return {"coords": [_fmt(c) for c in self.coords], "central": _fmt(self.central)}

    def __str__(self) -> str:
        parts = [f"{_fmt(c)}*a{i + 1}" for i, c in enumerate(self.coords) if c]
        if self.central_key:
            parts.append(f"v[{self.central_key}, (v,v)={_fmt(self.central)}]")
        return " + ".join(parts) if parts else "0"


def _fmt(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def inner(w1: Weight, w2: Weight) -> Fraction:
    """
    Symmetric bilinear form of A_{n-1}, extended by the central components.

    Raises:
        ValueError: If the ranks differ
    """
    w1._check(w2)
    datum = w1._datum
    total = Fraction(0)
    for i, a in enumerate(w1.coords):
        if not a:
            continue
        for j, b in enumerate(w2.coords):
            if b and abs(i - j) <= 1:
                total += a * b * datum.gram(i, j)
    if w1.central_key and w1.central_key == w2.central_key:
        total += w1.central
    return total


def simple_root(n: int, i: int) -> Weight:
    """alpha_i of A_{n-1} (1-based)."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"Simple root index {i} outside 1..{n - 1}")
    return Weight(tuple(Fraction(1 if t == i else 0) for t in range(1, n)))


def zero_weight(n: int) -> Weight:
    return Weight(tuple(Fraction(0) for _ in range(n - 1)))


def fundamental_weight(n: int, i: int) -> Weight:
    """
    i-th fundamental weight of A_{n-1} in the alpha basis.

    lambda_i = (1/n)[sum_{t<=i} t(n-i) alpha_t + sum_{t>i} i(n-t) alpha_t].

    Raises:
        ValueError: If i is outside 1..n-1
    """
    if n < 2 or not 1 <= i <= n - 1:
        raise ValueError(f"Fundamental weight index {i} outside 1..{n - 1}")
    coords = []
    for t in range(1, n):
        if t <= i:
            coords.append(Fraction(t * (n - i), n))
        else:
            coords.append(Fraction(i * (n - t), n))
    return Weight(tuple(coords))


def fundamental_weight_from_inverse(n: int, i: int) -> Weight:
    """Same weight read off the i-th column of the inverse Cartan matrix."""
    inv = inverse_cartan_a(n)
    return Weight(tuple(Fraction(int(inv[t, i - 1].p), int(inv[t, i - 1].q)) for t in range(n - 1)))


def epsilon_bar(n: int, i: int) -> Weight:
    """Traceless epsilon_i = lambda_1 - (alpha_1 + ... + alpha_{i-1})."""
    if not 1 <= i <= n:
        raise ValueError(f"Index {i} outside 1..{n}")
    weight = fundamental_weight(n, 1)
    for t in range(1, i):
        weight = weight - simple_root(n, t)
    return weight


def from_coords(values: Sequence[Rational]) -> Weight:
    return Weight(tuple(Fraction(v) for v in values))
