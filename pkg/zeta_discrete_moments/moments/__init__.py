"""The moment polynomial P_{mu,nu} and the Laurent coefficients it is built from."""

from .coefficients import CoefficientKind, CoefficientSet, c_coefficients, d_coefficients
from .polynomial import (
    C1,
    C2,
    BranchPolicy,
    MomentPolynomial,
    assemble_polynomial,
    density_polynomial,
    equal_order_closed_form,
    leading_coeff_closed_form,
    polynomial_from_strings,
    residue_log_polynomial,
    second_moment_polynomial,
)

__all__ = [
    "C1",
    "C2",
    "BranchPolicy",
    "CoefficientKind",
    "CoefficientSet",
    "MomentPolynomial",
    "assemble_polynomial",
    "c_coefficients",
    "d_coefficients",
    "density_polynomial",
    "equal_order_closed_form",
    "leading_coeff_closed_form",
    "polynomial_from_strings",
    "residue_log_polynomial",
    "second_moment_polynomial",
]
