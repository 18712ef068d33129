"""Tool: evaluate_basis - values and norms of wedge, boundary or interior OPs"""

import logging
import re
from typing import Optional

import numpy as np

from wedge_orthopoly.square.boundary import BoundaryBasis, BoundaryPoint, BoundaryWeights
from wedge_orthopoly.square.interior import InteriorBasis, check_index
from wedge_orthopoly.univariate.weights import WeightSpec
from wedge_orthopoly.wedge.basis import JacobiWedgeBasis
from wedge_orthopoly.wedge.geometry import WedgePoint

logger = logging.getLogger(__name__)

FAMILIES = ("wedge", "boundary", "interior")

_WEDGE_INDEX = re.compile(r"^([PQR])(\d+)$")


def parse_index(family: str, index) -> tuple:
    """'P3' / 'Q2' / '1' for the wedge, (n, i) for the boundary, (n, k, i) inside"""
    if family == "wedge":
        text = str(index).strip().upper()
        if text in ("1", "P0"):
            return ("P", 0)
        match = _WEDGE_INDEX.match(text)
        if not match or int(match.group(2)) < 1:
            raise IndexError(f"Invalid wedge index: {index}")
        return (match.group(1), int(match.group(2)))

    parts = [int(v) for v in (index.split(",") if isinstance(index, str) else index)]
    expected = 2 if family == "boundary" else 3
    if len(parts) != expected:
        raise IndexError(f"{family} index needs {expected} integers: {index}")
    return tuple(parts)


def _wedge_values(basis: JacobiWedgeBasis, key: tuple, points: list) -> tuple[list, float]:
    family, n = key
    element = {"P": basis.P, "Q": basis.Q, "R": basis.R}[family](n)
    for x, y in points:
        WedgePoint.from_xy(x, y)
    x, y = np.array(points, dtype=float).T
    return [float(v) for v in element(x, y)], float(element.norm)


async def evaluate_basis(
    family: str,
    indices: list,
    points: list,
    alpha: float = 0.0,
    beta: Optional[float] = None,
    gamma: float = 0.0,
    sigma: float = 1.0,
) -> dict:
    """
    Evaluate orthogonal polynomials at points of their domain.

    Args:
        family: 'wedge', 'boundary' or 'interior'
        indices: element indices in the family's notation
        points: list of [x, y]
        alpha, beta, gamma, sigma: weight parameters; interior uses w_{alpha,gamma} radially

    Returns:
        per-index values and norms plus the parameters used
    """
    if family not in FAMILIES:
        return {"error": f"Unknown family: {family}", "values": []}
    if not points:
        return {"error": "points required", "values": []}

    beta = alpha if beta is None else beta
    keys = [parse_index(family, idx) for idx in indices]
    results = []

    if family == "wedge":
        basis = JacobiWedgeBasis(alpha, beta, gamma, sigma)
        for key in keys:
            values, norm = _wedge_values(basis, key, points)
            results.append({"index": f"{key[0]}{key[1]}", "values": values, "norm": norm})
        params = basis.describe()

    elif family == "boundary":
        basis = BoundaryBasis(BoundaryWeights(alpha, beta, gamma))
        for x, y in points:
            BoundaryPoint.from_xy(x, y)
        x, y = np.array(points, dtype=float).T
        for n, i in keys:
            element = basis.Y(n, i)
            results.append({"index": element.label(), "values": [float(v) for v in element(x, y)], "norm": element.norm})
        params = basis.describe()

    else:
        n_max = max(k[0] for k in keys)
        basis = InteriorBasis(WeightSpec.jacobi(alpha, gamma), n_max)
        x, y = np.array(points, dtype=float).T
        if np.any(np.maximum(np.abs(x), np.abs(y)) > 1.0):
            raise ValueError("Interior points must lie in [-1,1]^2")
        for n, k, i in keys:
            check_index(n, k, i)
            results.append({
                "index": f"Q{n},{k},{i}",
                "values": [float(v) for v in basis.evaluate(n, k, i, x, y)],
                "norm": basis.norm(n, k, i),
            })
        params = {"weight": "jacobi", "alpha": alpha, "gamma": gamma, "n_max": n_max}

    logger.debug("evaluated %d %s elements at %d points", len(results), family, len(points))
    return {
        "family": family,
        "params": params,
        "points": [[float(x), float(y)] for x, y in points],
        "values": results,
    }
