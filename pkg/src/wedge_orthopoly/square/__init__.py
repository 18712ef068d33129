"""Orthogonal polynomials on the boundary and interior of [-1,1]^2"""

from .boundary import (
    BoundaryBasis,
    BoundaryElement,
    BoundaryPoint,
    BoundaryWeights,
    ParityComponents,
    Side,
    boundary_basis,
    boundary_norm,
    eval_Y,
    expand_boundary,
    inner_product_boundary,
    parity_split,
    partial_sum_boundary,
    sigma_choice,
)
from .interior import (
    InteriorBasis,
    SquareRadialCoords,
    eval_Q_interior,
    expand_interior,
    gram_interior,
    inner_product_square,
    interior_indices,
    interior_norm,
    to_radial,
)

__all__ = [
    "BoundaryBasis",
    "BoundaryElement",
    "BoundaryPoint",
    "BoundaryWeights",
    "InteriorBasis",
    "ParityComponents",
    "Side",
    "SquareRadialCoords",
    "boundary_basis",
    "boundary_norm",
    "eval_Q_interior",
    "eval_Y",
    "expand_boundary",
    "expand_interior",
    "gram_interior",
    "inner_product_boundary",
    "inner_product_square",
    "interior_indices",
    "interior_norm",
    "parity_split",
    "partial_sum_boundary",
    "sigma_choice",
    "to_radial",
]
