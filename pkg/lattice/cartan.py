"""
Cartan matrices of the classical series and symmetrization.

Matrices follow a_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i), with the node
order of the series' standard diagram and, for B/C/D, the node that a growth
step adds placed last.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import sympy as sp

logger = logging.getLogger(__name__)

CartanMatrix = Tuple[Tuple[int, ...], ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}


class LatticeError(ValueError):
    """Raised for Cartan data that is not integral or not symmetrizable."""


def _chain(rank: int) -> sp.Matrix:
    return sp.Matrix(rank, rank, lambda i, j: 2 if i == j else -1 if abs(i - j) == 1 else 0)


def _freeze(matrix: sp.Matrix) -> CartanMatrix:
    return tuple(tuple(int(matrix[i, j]) for j in range(matrix.cols)) for i in range(matrix.rows))


@lru_cache(maxsize=64)
def cartan_matrix(series: str, rank: int) -> CartanMatrix:
    """
    Standard Cartan matrix of a classical series.

    Args:
        series: One of "A", "B", "C", "D"
        rank: Number of simple roots

    Returns:
        CartanMatrix: Integer matrix as nested tuples

    Raises:
        ValueError: For an unknown series or a rank below the series minimum
    """
    series = series.upper()
    if series not in _MIN_RANK:
        available = ", ".join(_MIN_RANK)
        raise ValueError(f"Unsupported series '{series}'. Available: {available}")
    if rank < _MIN_RANK[series]:
        raise ValueError(
            f"Series {series} needs rank >= {_MIN_RANK[series]}, got {rank}"
        )
    c = _chain(rank)
    if series == "B":
        c[rank - 1, rank - 2] = -2
    elif series == "C":
        c[rank - 2, rank - 1] = -2
    elif series == "D":
        c[rank - 2, rank - 1] = 0
        c[rank - 1, rank - 2] = 0
        c[rank - 3, rank - 1] = -1
        c[rank - 1, rank - 3] = -1
    return _freeze(c)


def reference_cartan(series: str, rank: int) -> CartanMatrix:
    """Comparison target for a grown B/C/D algebra; the new node is last."""
    if series.upper() not in ("B", "C", "D"):
        raise ValueError(f"Reference series must be B, C or D, got '{series}'")
    return cartan_matrix(series, rank)


@lru_cache(maxsize=32)
def inverse_cartan_a(n: int) -> sp.Matrix:
    """Exact inverse of the A_{n-1} Cartan matrix."""
    return sp.Matrix(cartan_matrix("A", n - 1)).inv()


def symmetrizer(matrix: Sequence[Sequence[int]], anchor: Optional[Sequence[Fraction]] = None) -> List[Fraction]:
    """
    Find d_i with d_i a_ij = d_j a_ji.

    Args:
        matrix: Square integer matrix
        anchor: Optional known d values; entries left None are propagated

    Returns:
        List[Fraction]: The d_i, normalized so node 0 has d = 1 unless anchored

    Raises:
        LatticeError: If no symmetrizer exists
    """
    size = len(matrix)
    d: List[Optional[Fraction]] = [None] * size
    if anchor is not None:
        d = [Fraction(x) if x is not None else None for x in anchor]
    for start in range(size):
        if d[start] is None:
            d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(size):
                if i == j or matrix[i][j] == 0:
                    continue
                if matrix[j][i] == 0:
                    raise LatticeError(f"a[{i}][{j}] != 0 but a[{j}][{i}] == 0")
                value = d[i] * matrix[i][j] / matrix[j][i]
                if d[j] is None:
                    d[j] = value
                    stack.append(j)
                elif d[j] != value:
                    raise LatticeError(f"Matrix is not symmetrizable at ({i}, {j})")
    return [x for x in d]


def dynkin_edges(matrix: Sequence[Sequence[int]]) -> List[Tuple[int, int, int, Optional[int]]]:
    """
    Edges of the Dynkin diagram.

    Returns:
        List of (i, j, multiplicity, short_node) with i < j; short_node is the
        node the arrow points to for multi-laced edges, None otherwise
    """
    edges = []
    size = len(matrix)
    for i in range(size):
        for j in range(i + 1, size):
            if matrix[i][j] == 0:
                continue
            multiplicity = matrix[i][j] * matrix[j][i]
            short = None
            if multiplicity > 1:
                # |a_ij| > 1 means alpha_i is the shorter root
                short = i if abs(matrix[i][j]) > abs(matrix[j][i]) else j
            edges.append((i, j, multiplicity, short))
    return edges
