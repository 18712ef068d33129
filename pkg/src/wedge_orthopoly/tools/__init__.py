"""MCP tool implementations"""

from .basis_eval import evaluate_basis
from .dpp_experiment import run_dpp_experiment
from .expansion import expand_function
from .operator_export import export_operators
from .stieltjes_grid import stieltjes_grid

__all__ = [
    "evaluate_basis",
    "expand_function",
    "export_operators",
    "run_dpp_experiment",
    "stieltjes_grid",
]
