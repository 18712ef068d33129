"""Jacobi operators for the wedge basis"""

from .jacobi_operators import (
    BlockTriDiag,
    CoeffVector,
    build_jacobi_operators,
    one_minus_x_closed,
    one_minus_x_oracle,
    one_minus_y_rows,
    validate_closed_forms,
    vanish_combination,
)

__all__ = [
    "BlockTriDiag",
    "CoeffVector",
    "build_jacobi_operators",
    "one_minus_x_closed",
    "one_minus_x_oracle",
    "one_minus_y_rows",
    "validate_closed_forms",
    "vanish_combination",
]
