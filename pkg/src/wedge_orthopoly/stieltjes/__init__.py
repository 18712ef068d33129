"""Stieltjes transforms of the wedge OPs"""

from .recurrence import (
    ConditioningError,
    ConvergenceError,
    StieltjesResult,
    TailSolution,
    block_thomas,
    forward_recurrence,
    olver_miller_solve,
    olver_solve,
    recurrence_residual,
    solve_query,
    solve_tails,
    stieltjes_auto,
    z_operator,
)
from .transform import (
    ContourError,
    StieltjesQuery,
    contour_distance,
    stieltjes_base,
    stieltjes_element,
    stieltjes_oracle,
)

__all__ = [
    "ConditioningError",
    "ContourError",
    "ConvergenceError",
    "StieltjesQuery",
    "StieltjesResult",
    "TailSolution",
    "block_thomas",
    "contour_distance",
    "forward_recurrence",
    "olver_miller_solve",
    "olver_solve",
    "recurrence_residual",
    "solve_query",
    "solve_tails",
    "stieltjes_auto",
    "stieltjes_base",
    "stieltjes_element",
    "stieltjes_oracle",
    "z_operator",
]
