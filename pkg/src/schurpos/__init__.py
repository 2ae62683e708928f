"""Exact Schur-basis, Temperley-Lieb and Horn-Klyachko tools for checking
tensor-product containment of sl_n modules."""

__version__ = "0.1.0"

from .combinatorics import (
    DominantWeight,
    Partition,
    dominance_leq,
    is_321_avoiding,
    partition_from_subset,
    reduce_mod_ones,
    reduced_word,
)
from .schur import (
    CharacterVector,
    SchurVector,
    character_product,
    h_poly_to_schur,
    lr_coefficient,
    schur_product,
)
from .verifier import (
    chi_nonnegativity_check,
    construct_pairing,
    support_containment_check,
    sweep_conjecture,
    sweep_theorem,
    verify_pairing,
)

__all__ = [
    "DominantWeight",
    "Partition",
    "dominance_leq",
    "is_321_avoiding",
    "partition_from_subset",
    "reduce_mod_ones",
    "reduced_word",
    "CharacterVector",
    "SchurVector",
    "character_product",
    "h_poly_to_schur",
    "lr_coefficient",
    "schur_product",
    "chi_nonnegativity_check",
    "construct_pairing",
    "support_containment_check",
    "sweep_conjecture",
    "sweep_theorem",
    "verify_pairing",
]
