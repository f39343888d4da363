"""
R-matrices of the symmetric and exterior squares by cabling.

W sits inside V (x) V as an eigenspace of the seed braid operator. On
V^(x4), with W in legs (0, 1) and (2, 3), the braid word Rb_2 Rb_1 Rb_3 Rb_2
maps W (x) W to itself; its restriction is the braid operator of W and
R_WW = P_WW times it.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Tuple

from exact import LaurentScalar, PolyMatrix
from lattice import inner
from qrep import Rep, RepFactory

from .bundle import RMatrixBundle
from .legs import TensorVector, apply_on_legs, apply_word
from .star import seed_braid

logger = logging.getLogger(__name__)

CABLE_TAGS = ("sym2", "wedge2")


class CablingError(RuntimeError):
    """Raised when W is not a braid eigenspace or the braid word leaves W (x) W."""


def subspace_eigenvalue(tag: str, n: int, den: int) -> LaurentScalar:
    """q^(1-1/n) on the symmetric square, -q^(-1-1/n) on the exterior square."""
    if tag == "sym2":
        return LaurentScalar.q_power(den, 1 - Fraction(1, n))
    return LaurentScalar.q_power(den, -1 - Fraction(1, n), -1)


def _pivots(rep: Rep) -> List[Tuple[int, int]]:
    # each basis vector has coefficient 1 at its lexicographically first pair
    return [min(emb) for emb in rep.embedding]


def _pair_vector(rep: Rep, a: int, b: int) -> TensorVector:
    vector: TensorVector = {}
    for (x, y), u in rep.embedding[a].items():
        for (z, w), v in rep.embedding[b].items():
            vector[(x, y, z, w)] = u * v
    return vector


def check_eigenspace(rep: Rep, braid: PolyMatrix) -> None:
    """
    Raises:
        CablingError: If some basis vector of W is not an eigenvector with the expected eigenvalue
    """
    eig = subspace_eigenvalue(rep.tag, rep.n, rep.den)
    for index, emb in enumerate(rep.embedding):
        image = apply_on_legs(braid, rep.n, {(x, y): v for (x, y), v in emb.items()}, (0, 1))
        expected = {k: v * eig for k, v in emb.items()}
        if image != expected:
            raise CablingError(
                f"{rep.tag} basis vector {rep.labels[index]} is not a braid eigenvector with eigenvalue {eig}"
            )


def cabled_braid(rep: Rep, braid: PolyMatrix) -> PolyMatrix:
    """
    Braid operator of W read from Rb_2 Rb_1 Rb_3 Rb_2 on W (x) W.

    Raises:
        CablingError: If the image of W (x) W is not in W (x) W
    """
    m = rep.dim
    pivots = _pivots(rep)
    word = [(braid, (1, 2)), (braid, (0, 1)), (braid, (2, 3)), (braid, (1, 2))]
    vectors: Dict[Tuple[int, int], TensorVector] = {}
    entries = {}
    for a in range(m):
        for b in range(m):
            image = apply_word(word, rep.n, _pair_vector(rep, a, b))
            rebuilt: TensorVector = {}
            for c in range(m):
                for e in range(m):
                    coeff = image.get(pivots[c] + pivots[e])
                    if coeff is None:
                        continue
                    entries[(c * m + e, a * m + b)] = coeff
                    if (c, e) not in vectors:
                        vectors[(c, e)] = _pair_vector(rep, c, e)
                    for key, value in vectors[(c, e)].items():
                        term = coeff * value
                        rebuilt[key] = rebuilt[key] + term if key in rebuilt else term
            rebuilt = {k: v for k, v in rebuilt.items() if not v.is_zero}
            if rebuilt != image:
                raise CablingError(
                    f"Braid word leaves {rep.tag} (x) {rep.tag} at {rep.labels[a]} (x) {rep.labels[b]}"
                )
        logger.debug("Cabled row block %d of %d", a + 1, m)
    return PolyMatrix(m * m, m * m, rep.den, entries)


def check_extreme_diagonal(rep: Rep, rvv: PolyMatrix) -> None:
    """
    R_VV fixes v (x) v up to q^((mu, mu)) for the lowest and the highest basis vector.

    Raises:
        CablingError: On a mismatch
    """
    m = rep.dim
    for index in (0, rep.highest_index):
        mu = rep.weights[index]
        expected = LaurentScalar.q_power(rep.den, inner(mu, mu))
        actual = rvv[index * m + index, index * m + index]
        if actual != expected:
            raise CablingError(
                f"{rep.tag} diagonal entry at {rep.labels[index]} is {actual}, expected {expected}"
            )


def cable_rmatrix(n: int, sub: str) -> RMatrixBundle:
    """
    R_VV of the symmetric or exterior square, in the canonical basis order.

    Args:
        n: Rank parameter (n >= 2 for sym2, n >= 4 for wedge2)
        sub: "sym2" or "wedge2"

    Returns:
        RMatrixBundle: Bundle holding the representation and R_VV

    Raises:
        ValueError: If sub is not a cabled family
        RepresentationError: If n is out of range
        CablingError: If a cabling consistency check fails
    """
    if sub not in CABLE_TAGS:
        raise ValueError(f"Unsupported cabling target '{sub}'. Available: {', '.join(CABLE_TAGS)}")
    rep = RepFactory.create(sub, n)
    braid = seed_braid(n)
    check_eigenspace(rep, braid)
    braid_ww = cabled_braid(rep, braid)
    rvv = PolyMatrix.flip(rep.dim, rep.den) @ braid_ww
    check_extreme_diagonal(rep, rvv)
    logger.info("Cabled %s R-matrix for n=%d: dim %d", sub, n, rep.dim)
    return RMatrixBundle(rep=rep, rvv=rvv)
