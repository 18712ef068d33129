"""Orthogonal polynomials on the wedge"""

from .basis import (
    EqualWeightBasis,
    JacobiWedgeBasis,
    WedgeBasis,
    WedgeElement,
    dimension_wedge,
    eval_P_equal,
    eval_P_jacobi,
    eval_Q_equal,
    eval_Q_jacobi,
    eval_R_jacobi,
    wedge_norm_P,
    wedge_norm_Q,
)
from .expansion import (
    WedgeExpansion,
    convergence_report,
    expand_wedge,
    kernel_spectral,
    kernel_wedge,
    partial_sum_direct,
    partial_sum_wedge,
)
from .geometry import Segment, WedgeFunction, WedgePoint, as_wedge_function
from .inner import WedgeWeights, gram_matrix, inner_product_wedge

__all__ = [
    "EqualWeightBasis",
    "JacobiWedgeBasis",
    "Segment",
    "WedgeBasis",
    "WedgeElement",
    "WedgeExpansion",
    "WedgeFunction",
    "WedgePoint",
    "WedgeWeights",
    "as_wedge_function",
    "convergence_report",
    "dimension_wedge",
    "eval_P_equal",
    "eval_P_jacobi",
    "eval_Q_equal",
    "eval_Q_jacobi",
    "eval_R_jacobi",
    "expand_wedge",
    "gram_matrix",
    "inner_product_wedge",
    "kernel_spectral",
    "kernel_wedge",
    "partial_sum_direct",
    "partial_sum_wedge",
    "wedge_norm_P",
    "wedge_norm_Q",
]
