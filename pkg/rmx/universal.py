"""
Universal R evaluated on the vector representation.

R_VV = B o (T (x) T)(sum over roots), where B(v (x) w) = q^((mu, mu')) v (x) w
on weight vectors and the sum is the ordered product over positive roots
beta = eps_i - eps_j (lexicographic in (i, j)) of
sum_r c_r E_beta^r (x) F_beta^r, c_r = (1 - q^-2)^r q^(r(r+1)/2) / [r]!.
"""

import logging
from typing import Dict, Optional, Tuple

from exact import LaurentScalar, PolyMatrix, kron, qfactorial
from lattice import inner
from qrep import Rep, vector_rep

logger = logging.getLogger(__name__)


def root_vectors(rep: Rep) -> Dict[Tuple[int, int], Tuple[PolyMatrix, PolyMatrix]]:
    """
    (E_beta, F_beta) for beta = eps_i - eps_j, keyed by 1-based (i, j), i < j.

    E_{i,j+1} = E_{i,j} E_j - q^-1 E_j E_{i,j}
    F_{i,j+1} = F_j F_{i,j} - q F_{i,j} F_j
    """
    q = LaurentScalar.q_power(rep.den, 1)
    q_inv = LaurentScalar.q_power(rep.den, -1)
    out: Dict[Tuple[int, int], Tuple[PolyMatrix, PolyMatrix]] = {}
    for i in range(1, rep.n):
        e, f = rep.E(i), rep.F(i)
        out[(i, i + 1)] = (e, f)
        for j in range(i + 1, rep.n):
            e = e @ rep.E(j) - (rep.E(j) @ e).scale(q_inv)
            f = rep.F(j) @ f - (f @ rep.F(j)).scale(q)
            out[(i, j + 1)] = (e, f)
    return out


def root_coefficient(r: int, den: int) -> LaurentScalar:
    q = LaurentScalar.q_power(den, 1)
    base = (LaurentScalar.one(den) - LaurentScalar.q_power(den, -2)) ** r
    return (base * q ** (r * (r + 1) // 2)).exact_div(qfactorial(r, q))


def cartan_factor(left: Rep, right: Rep) -> PolyMatrix:
    """B: diagonal q^((mu, mu')) on left (x) right."""
    values = []
    for mu in left.weights:
        for nu in right.weights:
            values.append(LaurentScalar.q_power(left.den, inner(mu, nu)))
    return PolyMatrix.diagonal(values, left.den)


def quasi_r(rep: Rep, max_order: Optional[int] = None) -> PolyMatrix:
    """Ordered product over positive roots of the truncated q-exponentials."""
    den = rep.den
    identity = PolyMatrix.identity(rep.dim ** 2, den)
    result = identity
    for root, (e, f) in sorted(root_vectors(rep).items()):
        factor = identity
        e_pow, f_pow = e, f
        r = 1
        while not (e_pow.is_zero or f_pow.is_zero) and (max_order is None or r <= max_order):
            factor = factor + kron(e_pow, f_pow).scale(root_coefficient(r, den))
            e_pow, f_pow = e_pow @ e, f_pow @ f
            r += 1
        logger.debug("Root %s contributes %d terms", root, r - 1)
        result = result @ factor
    return result


def universal_r_vector(n: int, max_order: Optional[int] = None) -> PolyMatrix:
    """
    Operator matrix of the universal R on V (x) V.

    Args:
        n: Rank parameter, n >= 2
        max_order: Keep only terms with r <= max_order per root (0 leaves B)

    Returns:
        PolyMatrix: Operator-layout R_VV
    """
    rep = vector_rep(n)
    result = cartan_factor(rep, rep) @ quasi_r(rep, max_order)
    logger.info("Evaluated universal R on the vector representation for n=%d", n)
    return result
