"""Tool: stieltjes_grid - S[P_k w], S[Q_k w] over a list or rectangle of z"""

import logging
from typing import Optional

import numpy as np

from wedge_orthopoly.operators.jacobi_operators import plain_basis
from wedge_orthopoly.stieltjes.recurrence import ConditioningError, ConvergenceError, solve_query
from wedge_orthopoly.stieltjes.transform import ContourError, StieltjesQuery, stieltjes_oracle
from wedge_orthopoly.univariate.quadrature import QuadratureError

logger = logging.getLogger(__name__)

SOLVER_ERRORS = (ContourError, ConvergenceError, ConditioningError, QuadratureError, np.linalg.LinAlgError)

# spot-check one point in this many against the quadrature oracle
CHECK_EVERY = 10


def rectangle(re_min: float, re_max: float, im_min: float, im_max: float, nx: int, ny: int) -> list[complex]:
    """Row-major grid of nx * ny points"""
    return [complex(a, b) for b in np.linspace(im_min, im_max, ny) for a in np.linspace(re_min, re_max, nx)]


def _spot_check(result, alpha: float, gamma: float) -> float:
    """|S - oracle| for the highest P element"""
    k = result.k_max
    element = plain_basis(alpha, gamma).P(k)
    value = result.flat()[0 if k == 0 else 2 * k - 1]
    return abs(value - stieltjes_oracle(element, alpha, gamma, result.z))


def _error_row(z: complex, mode: str, message: str) -> dict:
    return {
        "re_z": z.real, "im_z": z.imag, "k": None, "label": None,
        "re_S": None, "im_S": None, "mode": mode, "est_error": None, "error": message,
    }


async def stieltjes_grid(
    points: Optional[list] = None,
    grid: Optional[list] = None,
    alpha: float = 0.0,
    gamma: float = 0.0,
    k_max: int = 10,
    mode: str = "auto",
    limit: bool = False,
    config: Optional[dict] = None,
) -> dict:
    """
    Evaluate Stieltjes transforms of the wedge OPs at many points.

    Args:
        points: list of [re, im]
        grid: [re_min, re_max, im_min, im_max, nx, ny], used when points is empty
        alpha, gamma: weight exponents (beta = alpha, sigma = 1)
        k_max: highest degree
        mode: forward, olver, olver-miller or auto
        limit: take boundary values for points on the contour
        config: loaded config for solver tolerances

    Returns:
        one row per point and basis element; failed points carry an error message
    """
    if points:
        zs = [complex(re, im) for re, im in points]
    elif grid:
        re_min, re_max, im_min, im_max, nx, ny = grid
        zs = rectangle(re_min, re_max, im_min, im_max, int(nx), int(ny))
    else:
        return {"error": "points or grid required", "rows": []}

    rows, failures = [], 0
    for index, z in enumerate(zs):
        try:
            result = solve_query(StieltjesQuery(z, alpha, gamma, k_max, mode, limit), config)
            if index % CHECK_EVERY == 0 and not limit:
                checked = _spot_check(result, alpha, gamma)
                result.est_error = max(result.est_error or 0.0, checked)
        except SOLVER_ERRORS as e:
            failures += 1
            logger.warning("stieltjes failed at z=%s: %s", z, e)
            rows.append(_error_row(z, mode, str(e)))
            continue
        rows.extend(dict(row, error=None) for row in result.rows())

    return {
        "summary": {
            "points": len(zs),
            "failures": failures,
            "alpha": alpha,
            "gamma": gamma,
            "k_max": k_max,
            "mode": mode,
        },
        "rows": rows,
    }
