"""Schubert problems of lines: Kostka numbers, Galois certificates, spectral identities."""

from ._core import (
    CertificateFormatError,
    InvalidProblem,
    SchublinesError,
    a2_bound_integrals,
    a2_difference,
    a2_row,
    difference_integral_a2,
    eigen_residual,
    enumerate_tableaux,
    equal_case_check,
    hook_kostka,
    is_reduced,
    is_valid,
    kostka,
    kostka_integral,
    lambda_eval,
    n_of,
    recursion_split,
    reduce,
    sweep,
    validate_certificate,
    verify,
)

__all__ = [
    "CertificateFormatError",
    "InvalidProblem",
    "SchublinesError",
    "a2_bound_integrals",
    "a2_difference",
    "a2_row",
    "difference_integral_a2",
    "eigen_residual",
    "enumerate_tableaux",
    "equal_case_check",
    "hook_kostka",
    "is_reduced",
    "is_valid",
    "kostka",
    "kostka_integral",
    "lambda_eval",
    "n_of",
    "recursion_split",
    "reduce",
    "sweep",
    "validate_certificate",
    "verify",
]
