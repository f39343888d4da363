"""
Root and weight lattice package for A_{n-1} plus comparison Cartan data.
"""

from .cartan import (
    CartanMatrix,
    LatticeError,
    cartan_matrix,
    dynkin_edges,
    reference_cartan,
    symmetrizer,
)
from .weights import (
    RootDatum,
    Weight,
    epsilon_bar,
    from_coords,
    fundamental_weight,
    fundamental_weight_from_inverse,
    inner,
    simple_root,
    type_a,
    zero_weight,
)

__all__ = [
    "CartanMatrix",
    "LatticeError",
    "cartan_matrix",
    "dynkin_edges",
    "reference_cartan",
    "symmetrizer",
    "RootDatum",
    "Weight",
    "epsilon_bar",
    "from_coords",
    "fundamental_weight",
    "fundamental_weight_from_inverse",
    "inner",
    "simple_root",
    "type_a",
    "zero_weight",
]
