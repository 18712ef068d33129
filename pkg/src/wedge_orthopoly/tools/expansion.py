"""Tool: expand_function - wedge Fourier coefficients and convergence table"""

import logging
from typing import Optional

from wedge_orthopoly.tools.builtins import get_builtin, load_samples
from wedge_orthopoly.univariate.weights import WeightSpec
from wedge_orthopoly.wedge.basis import EqualWeightBasis, JacobiWedgeBasis, WedgeBasis
from wedge_orthopoly.wedge.expansion import convergence_report, decay_rate, expand_wedge

logger = logging.getLogger(__name__)


def _pick_basis(alpha: float, beta: Optional[float], gamma: float, sigma: float, n_max: int) -> WedgeBasis:
    # equal weights with sigma = 1 get the even/odd identity column
    if (beta is None or beta == alpha) and sigma == 1.0:
        return EqualWeightBasis(WeightSpec.jacobi(alpha, gamma), max(n_max, 1))
    return JacobiWedgeBasis(alpha, alpha if beta is None else beta, gamma, sigma)


async def expand_function(
    function: Optional[str] = None,
    n_max: int = 10,
    alpha: float = 0.0,
    beta: Optional[float] = None,
    gamma: float = 0.0,
    sigma: float = 1.0,
    samples_path: Optional[str] = None,
) -> dict:
    """
    Expand a builtin or tabulated function in the wedge basis.

    Args:
        function: builtin name (exp, linear, cubic, kink, corner, step)
        n_max: highest degree
        alpha, beta, gamma, sigma: wedge weight parameters
        samples_path: CSV of segment,t,value rows used instead of a builtin

    Returns:
        coefficient record, per-degree error table and the fitted decay rate
    """
    if not function and not samples_path:
        return {"error": "function or samples_path required", "coefficients": []}
    if n_max < 0:
        return {"error": f"n_max must be >= 0: {n_max}", "coefficients": []}

    # Step 1: resolve the function
    f = load_samples(samples_path) if samples_path else get_builtin(function)

    # Step 2: coefficients against P_n and the second family
    basis = _pick_basis(alpha, beta, gamma, sigma, n_max)
    expansion = expand_wedge(f, basis, n_max)

    # Step 3: error table
    rows = convergence_report(basis, f, n_max)
    try:
        rate = decay_rate(rows, "wedge_error")
    except ValueError:
        # polynomial inputs leave too few nonzero errors to fit
        rate = None
    logger.info("expanded %s to degree %d", function or samples_path, n_max)

    return {
        "function": function or samples_path,
        "basis": "equal-weight" if isinstance(basis, EqualWeightBasis) else "jacobi",
        "expansion": expansion.to_record(),
        "convergence": rows,
        "decay_rate": rate,
    }
