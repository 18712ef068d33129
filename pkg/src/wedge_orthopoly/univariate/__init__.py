"""Univariate orthogonal-polynomial primitives"""

from .jacobi import (
    JacobiParams,
    eval_jacobi_shifted,
    eval_jacobi_table,
    jacobi_norm_h,
    jacobi_normalization,
    pochhammer,
)
from .orthopoly import (
    OrthogonalizationError,
    OrthoPoly1D,
    build_family,
    fourier_coefficients,
    jacobi_family,
    kernel_1d,
    parseval_sums,
    partial_sum_1d,
    stieltjes_procedure,
)
from .quadrature import QuadratureError, QuadratureRule, clenshaw_curtis_rule, gauss_rule
from .weights import WeightSpec

__all__ = [
    "JacobiParams",
    "OrthoPoly1D",
    "OrthogonalizationError",
    "QuadratureError",
    "QuadratureRule",
    "WeightSpec",
    "build_family",
    "clenshaw_curtis_rule",
    "eval_jacobi_shifted",
    "eval_jacobi_table",
    "fourier_coefficients",
    "gauss_rule",
    "jacobi_family",
    "jacobi_norm_h",
    "jacobi_normalization",
    "kernel_1d",
    "parseval_sums",
    "partial_sum_1d",
    "pochhammer",
    "stieltjes_procedure",
]
