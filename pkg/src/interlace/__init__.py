"""Workbench for maximal non-l-intertwining collections of cyclic subsets
and the labeled quivers attached to them."""

from .subsets import (
    Collection,
    CyclicSubset,
    check,
    decompose,
    hat,
    intertwines,
    is_valid_collection,
    l_intertwines,
    l_intertwines_fast,
    weakly_separated,
)
from .slices import construct_Ck, construct_Ck_prime, is_slice, phi, psi, standard_slice
from .mutation import is_mutable, mutate, mutation_path, shift, slice_mutate

__all__ = [
    "Collection",
    "CyclicSubset",
    "check",
    "construct_Ck",
    "construct_Ck_prime",
    "decompose",
    "hat",
    "intertwines",
    "is_mutable",
    "is_slice",
    "is_valid_collection",
    "l_intertwines",
    "l_intertwines_fast",
    "mutate",
    "mutation_path",
    "phi",
    "psi",
    "shift",
    "slice_mutate",
    "standard_slice",
    "weakly_separated",
]
