"""Square matrices over ring_core rings and polynomials in a central x."""

from matrix_algebra.central_poly import CentralPoly, XPoly, cpoly_mul, x_identity_minus, xpoly_sum
from matrix_algebra.conjugation import conjugate, invert_central
from matrix_algebra.matrix import (
    Matrix,
    mat_add,
    mat_mul,
    mat_power,
    mat_scale,
    mat_trace,
    permutation_matrix,
    random_matrix,
)

__all__ = [
    "CentralPoly",
    "Matrix",
    "XPoly",
    "conjugate",
    "cpoly_mul",
    "invert_central",
    "mat_add",
    "mat_mul",
    "mat_power",
    "mat_scale",
    "mat_trace",
    "permutation_matrix",
    "random_matrix",
    "x_identity_minus",
    "xpoly_sum",
]
