"""GL(2) intertwining operators on level-m invariants, exactly over Q(zeta_n)."""

from .cosets import CosetBasis, LevelTooLarge, coset_basis, iwasawa, k_generators, mat2
from .operator import (
    ConvergenceError,
    InducedVector,
    LaurentPoly,
    OperatorMatrix,
    RationalFamilyMatrix,
    galois_transport_check,
    intertwiner_matrix,
    k_equivariance_check,
    normalisation_factor,
    normalized_matrix,
    rational_family,
    right_translation_matrix,
    target_characters,
)
from .oracle import OracleResult, expected_ratio, numeric_oracle

__all__ = [
    "ConvergenceError",
    "CosetBasis",
    "InducedVector",
    "LaurentPoly",
    "LevelTooLarge",
    "OperatorMatrix",
    "OracleResult",
    "RationalFamilyMatrix",
    "coset_basis",
    "expected_ratio",
    "galois_transport_check",
    "intertwiner_matrix",
    "iwasawa",
    "k_generators",
    "k_equivariance_check",
    "mat2",
    "normalisation_factor",
    "normalized_matrix",
    "numeric_oracle",
    "rational_family",
    "right_translation_matrix",
    "target_characters",
]
