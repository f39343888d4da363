"""
Torus action and the tensor-product action.

K_i^c acts on a weight-mu vector by q^(c (alpha_i, mu)). The coproduct is
Delta(E_i) = E_i (x) K_i + 1 (x) E_i and Delta(F_i) = F_i (x) 1 + K_i^-1 (x) F_i.
"""

import logging
from fractions import Fraction
from typing import List, Tuple, Union

from exact import LaurentScalar, PolyMatrix, kron
from lattice import Weight, inner, simple_root

from .base import Rep, RepresentationError

logger = logging.getLogger(__name__)


def weight_action(rep: Rep, weight: Weight) -> PolyMatrix:
    """
    Diagonal matrix of K_weight: q^((weight, mu)) on a weight-mu vector.

    Raises:
        RepresentationError: If an exponent leaves the session lattice
    """
    values = []
    for label, mu in zip(rep.labels, rep.weights):
        exponent = inner(weight, mu)
        try:
            values.append(LaurentScalar.q_power(rep.den, exponent))
        except ValueError as e:
            raise RepresentationError(f"K exponent {exponent} on {label} off the lattice: {e}") from e
    return PolyMatrix.diagonal(values, rep.den)


def torus_action(rep: Rep, i: int, c: Union[int, Fraction, str] = 1) -> PolyMatrix:
    """
    Diagonal matrix of K_i^c.

    Args:
        rep: Representation
        i: Simple index, 1-based
        c: Rational power

    Returns:
        PolyMatrix: Diagonal entries q^(c (alpha_i, mu))

    Raises:
        RepresentationError: If c (alpha_i, mu) is not in (1/D)Z
    """
    return weight_action(rep, simple_root(rep.n, i).scale(Fraction(c)))


def tensor_action(left: Rep, right: Rep) -> Tuple[List[PolyMatrix], List[PolyMatrix]]:
    """
    E_i and F_i on left (x) right through the coproduct.

    Returns:
        Tuple of (E list, F list), index i - 1 for E_i / F_i
    """
    if left.n != right.n:
        raise RepresentationError(f"Tensor factors have different n: {left.n} vs {right.n}")
    id_left = PolyMatrix.identity(left.dim, left.den)
    id_right = PolyMatrix.identity(right.dim, right.den)
    es, fs = [], []
    for i in range(1, left.n):
        k_right = torus_action(right, i)
        k_inv_left = torus_action(left, i, -1)
        es.append(kron(left.E(i), k_right) + kron(id_left, right.E(i)))
        fs.append(kron(left.F(i), id_right) + kron(k_inv_left, right.F(i)))
    return es, fs
