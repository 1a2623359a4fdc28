# /src/core/reduction/__init__.py

"""DP-reduction, singular DP normal forms and clause-set isomorphism."""

from .dp import Reducer, dp_reduce, singular_variables
from .isomorphism import (
    CanonicalLabelling,
    IsomorphismChecker,
    apply_renaming,
    invert_renaming,
    isomorphism_invariant,
)

__all__ = [
    "Reducer",
    "dp_reduce",
    "singular_variables",
    "CanonicalLabelling",
    "IsomorphismChecker",
    "apply_renaming",
    "invert_renaming",
    "isomorphism_invariant",
]
