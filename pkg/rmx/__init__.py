"""
R-matrices: closed form, universal-R oracle, cabling, Yang-Baxter checks,
spectra, normalization and R'.
"""

from .bundle import FREE, HECKE, MINUS_ONE, RMatrixBundle, Spectrum
from .cabling import CablingError, cable_rmatrix
from .legs import apply_on_legs, apply_word
from .pipeline import build_bundle, check_universal_oracle, vector_bundle, with_checks
from .qybe import check_braid_relation, check_qybe, check_rprime_conditions
from .spectrum import (
    NormalizationError,
    check_normalized_minpoly,
    check_rprime_closed_form,
    check_triangular,
    negative_eigenvalue,
    normalize_and_rprime,
    rescaled_eigenvalues,
    rprime_closed_form,
    spectrum,
)
from .star import convert, index_entry, pr_entry, pr_matrix, seed_braid, side_dimension, vector_rmatrix_star
from .universal import root_vectors, universal_r_vector

__all__ = [
    "FREE",
    "HECKE",
    "MINUS_ONE",
    "RMatrixBundle",
    "Spectrum",
    "CablingError",
    "cable_rmatrix",
    "apply_on_legs",
    "apply_word",
    "build_bundle",
    "check_universal_oracle",
    "vector_bundle",
    "with_checks",
    "check_braid_relation",
    "check_qybe",
    "check_rprime_conditions",
    "NormalizationError",
    "check_normalized_minpoly",
    "check_rprime_closed_form",
    "check_triangular",
    "negative_eigenvalue",
    "normalize_and_rprime",
    "rescaled_eigenvalues",
    "rprime_closed_form",
    "spectrum",
    "convert",
    "index_entry",
    "pr_entry",
    "pr_matrix",
    "seed_braid",
    "side_dimension",
    "vector_rmatrix_star",
    "root_vectors",
    "universal_r_vector",
]
