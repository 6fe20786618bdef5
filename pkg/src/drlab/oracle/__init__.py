"""Brute-force graded linear algebra used to check the closed forms."""

from .fields import DEFAULT_PRIME, SECOND_PRIME, FieldSpec
from .graded import (
    GradedSubspace,
    IdealPowerSpec,
    eagon_northcott_columns,
    graded_dim,
    graded_piece,
    h_from_hilbert,
    h_vector,
    hilbert_function,
    mu_graded_ideal,
    oracle_mu_mk,
    oracle_type,
    presentation_mu,
)
from .linalg import BACKEND
from .polys import GenericMatrixSpec, minors

__all__ = [
    "BACKEND",
    "DEFAULT_PRIME",
    "SECOND_PRIME",
    "FieldSpec",
    "GenericMatrixSpec",
    "GradedSubspace",
    "IdealPowerSpec",
    "eagon_northcott_columns",
    "graded_dim",
    "graded_piece",
    "h_from_hilbert",
    "h_vector",
    "hilbert_function",
    "minors",
    "mu_graded_ideal",
    "oracle_mu_mk",
    "oracle_type",
    "presentation_mu",
]
