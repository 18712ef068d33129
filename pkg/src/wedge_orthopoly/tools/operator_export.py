"""Tool: export_operators - J_x and J_y blocks with their provenance"""

import logging
from fractions import Fraction
from typing import Union

from wedge_orthopoly.operators.jacobi_operators import (
    VALIDATE_UP_TO,
    build_jacobi_operators,
    validate_closed_forms,
)

logger = logging.getLogger(__name__)

MAX_DENOMINATOR = 1000


def exact_parameter(value: float) -> Union[Fraction, float]:
    """Fraction when a short rational rounds to exactly this float, else the float"""
    guess = Fraction(str(value)).limit_denominator(MAX_DENOMINATOR)
    return guess if float(guess) == value else float(value)


async def export_operators(alpha: float = 0.0, gamma: float = 0.0, n_max: int = 10, source: str = "auto") -> dict:
    """
    Build the multiplication operators for beta = alpha, sigma = 1.

    Args:
        alpha, gamma: weight exponents
        n_max: highest degree block
        source: 'auto', 'closed-form' or 'oracle'

    Returns:
        both operators as block lists and the closed-form validation report
    """
    if n_max < 1:
        return {"error": f"n_max must be >= 1: {n_max}"}

    # rational exponents give exact closed-form entries
    jx, jy = build_jacobi_operators(exact_parameter(alpha), exact_parameter(gamma), n_max, source)
    report = validate_closed_forms(alpha, gamma, min(n_max, VALIDATE_UP_TO))
    logger.info("exported operators to degree %d (%s)", n_max, jx.provenance)

    return {
        "provenance": jx.provenance,
        "validation": report,
        "jx": jx.export(),
        "jy": jy.export(),
    }
