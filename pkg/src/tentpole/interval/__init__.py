"""Sums-of-squares representations of polynomials nonnegative on [-1, 1]."""

from tentpole.interval.boundary import AdaptResult, MatchMode, adapt_sos, boundary_matched_sqrt
from tentpole.interval.lukacs import (
    WEIGHT,
    KmsForm,
    LukacsForm,
    Parity,
    TwoSquareForm,
    kms_form,
    lukacs_decompose,
)

__all__ = [
    "WEIGHT",
    "AdaptResult",
    "KmsForm",
    "LukacsForm",
    "MatchMode",
    "Parity",
    "TwoSquareForm",
    "adapt_sos",
    "boundary_matched_sqrt",
    "kms_form",
    "lukacs_decompose",
]
