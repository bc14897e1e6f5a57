"""Exact symbolic verification of Pfaffian central elements for the even
orthogonal affine Lie algebra at the critical level."""

from .algebra import (
    Context,
    Element,
    Gen,
    bracket,
    canonicalize,
    element_from_items,
    make_generator,
    multiply,
    word_element,
)
from .errors import ConsistencyError, InputError
from .kpoly import KPoly
from .matchings import Matching, enumerate_matchings, odd_double_factorial
from .pfaffian import (
    pfaffian_full_sum_oracle,
    pfaffian_minus_one,
    pfaffian_submatrix,
    permute_indices,
    residual_noncritical,
)
from .sugawara import (
    apply_sugawara_full,
    check_sugawara_commutation,
    sugawara_plus_coefficient,
)
from .vacuum import (
    LevelPolicy,
    VacuumVector,
    apply,
    is_annihilated_by_modes,
    vacuum,
)

__all__ = [
    "ConsistencyError",
    "Context",
    "Element",
    "Gen",
    "InputError",
    "KPoly",
    "LevelPolicy",
    "Matching",
    "VacuumVector",
    "apply",
    "apply_sugawara_full",
    "bracket",
    "canonicalize",
    "check_sugawara_commutation",
    "element_from_items",
    "enumerate_matchings",
    "is_annihilated_by_modes",
    "make_generator",
    "multiply",
    "odd_double_factorial",
    "pfaffian_full_sum_oracle",
    "pfaffian_minus_one",
    "pfaffian_submatrix",
    "permute_indices",
    "residual_noncritical",
    "sugawara_plus_coefficient",
    "vacuum",
    "word_element",
]

__version__ = "0.1.0"
