"""
Weight-basis representations of U_q(sl_n): vector, symmetric square and
exterior square.
"""

from .base import Rep, RepBuilder, RepresentationError
from .factory import RepFactory
from .tensor_square import Sym2RepBuilder, Wedge2RepBuilder, raw_wedge2_rep, sym2_rep, wedge2_rep
from .torus import tensor_action, torus_action, weight_action
from .vector import VectorRepBuilder, vector_rep

__all__ = [
    "Rep",
    "RepBuilder",
    "RepresentationError",
    "RepFactory",
    "Sym2RepBuilder",
    "Wedge2RepBuilder",
    "raw_wedge2_rep",
    "sym2_rep",
    "wedge2_rep",
    "tensor_action",
    "torus_action",
    "weight_action",
    "VectorRepBuilder",
    "vector_rep",
]
