"""
Growth of B/C/D quantum groups out of A_{n-1}: m+ closed forms, new root
data, extended Cartan matrices, relation instances and the growth tree.
"""

from .mplus import (
    CONVENTIONS,
    Convention,
    MPlusEntry,
    MPlusError,
    counit_check,
    evaluate,
    mplus_closed_form,
    rmatrix_slice,
    verify_mplus_pairing,
)
from .growth import (
    SERIES,
    GrowthError,
    GrowthResult,
    NewRootData,
    cartan_from_inner,
    extended_cartan,
    new_root_data,
    normalization_constant,
    route_b_data,
    serre_degrees,
)
from .instances import cubic_radical_instance, expected_inner_products, expected_serre_degrees, relation_instances
from .step import growth_step
from .tree import CITED, VERIFIED, build_tree, node_key, sorted_edges, sorted_nodes

__all__ = [
    "CONVENTIONS",
    "Convention",
    "MPlusEntry",
    "MPlusError",
    "counit_check",
    "evaluate",
    "mplus_closed_form",
    "rmatrix_slice",
    "verify_mplus_pairing",
    "SERIES",
    "GrowthError",
    "GrowthResult",
    "NewRootData",
    "cartan_from_inner",
    "extended_cartan",
    "new_root_data",
    "normalization_constant",
    "route_b_data",
    "serre_degrees",
    "cubic_radical_instance",
    "expected_inner_products",
    "expected_serre_degrees",
    "relation_instances",
    "growth_step",
    "CITED",
    "VERIFIED",
    "build_tree",
    "node_key",
    "sorted_edges",
    "sorted_nodes",
]
