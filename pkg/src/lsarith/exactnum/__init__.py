"""Exact number scaffolding: cyclotomic fields, p-adic scalars, characters."""

from .characters import (
    EulerFactor,
    Pole,
    SmoothCharacter,
    char_eval,
    common_field,
    euler_factor,
    l_value,
    restrictions_agree,
    right_of_axis_check,
    weight_consistency,
)
from .cyclotomic import CycNumber, galois_apply, galois_group, phi
from .padic import PAdicScalar, PrecisionError

__all__ = [
    "CycNumber",
    "EulerFactor",
    "PAdicScalar",
    "Pole",
    "PrecisionError",
    "SmoothCharacter",
    "char_eval",
    "common_field",
    "euler_factor",
    "galois_apply",
    "galois_group",
    "l_value",
    "phi",
    "restrictions_agree",
    "right_of_axis_check",
    "weight_consistency",
]
