"""
Free braided vector algebras: braided words, coproducts, dual pairings,
radicals and quadratic relations.
"""

from .words import (
    BraidedAlgebra,
    LinComb,
    Word,
    braid_apply,
    braided_algebra,
    coassociativity_check,
    coproduct_component,
    multiply,
    render_comb,
    render_word,
)
from .pairing import PairingBlock, PairingMatrix, SizeCapExceeded, check_size, pairing_blocks, pairing_matrix
from .radical import (
    RadicalResult,
    cubic_e_element,
    cubic_f_element,
    mirrored_cubic_element,
    pairs_to_zero,
    predicted_elements,
    radical_basis,
    radical_ideal_check,
)
from .relations import QuadraticRelations, quadratic_relations

__all__ = [
    "BraidedAlgebra",
    "LinComb",
    "Word",
    "braid_apply",
    "braided_algebra",
    "coassociativity_check",
    "coproduct_component",
    "multiply",
    "render_comb",
    "render_word",
    "PairingBlock",
    "PairingMatrix",
    "SizeCapExceeded",
    "check_size",
    "pairing_blocks",
    "pairing_matrix",
    "RadicalResult",
    "cubic_e_element",
    "cubic_f_element",
    "mirrored_cubic_element",
    "pairs_to_zero",
    "predicted_elements",
    "radical_basis",
    "radical_ideal_check",
    "QuadraticRelations",
    "quadratic_relations",
]
