"""Tool: run_dpp_experiment - sample a wedge DPP and tabulate gap probabilities"""

import logging
from typing import Optional

from wedge_orthopoly.dpp.basis import GRID_POINTS, coulomb_basis, orthonormal_wedge_basis
from wedge_orthopoly.dpp.gaps import gap_statistics
from wedge_orthopoly.dpp.sampler import sample_many
from wedge_orthopoly.wedge.geometry import WedgePoint

logger = logging.getLogger(__name__)

MODELS = ("op", "coulomb")
DEFAULT_Z0 = [[1.0, 1.0], [0.0, 1.0], [0.5, 1.0], [0.7, 1.0]]


async def run_dpp_experiment(
    model: str = "op",
    n: int = 20,
    samples: int = 100,
    seed: int = 0,
    z0: Optional[list] = None,
    alpha: float = 0.0,
    gamma: float = 0.0,
    grid_points: int = GRID_POINTS,
    include_samples: bool = False,
) -> dict:
    """
    Draw projection-DPP samples and compute gap curves.

    Args:
        model: 'op' (orthonormal wedge basis) or 'coulomb' (complex monomials)
        n: number of points per sample
        samples: number of independent samples
        seed: master seed for the per-sample streams
        z0: reference points [x, y] on the wedge
        alpha, gamma: weight exponents for model 'op'
        grid_points: Clenshaw-Curtis points per segment
        include_samples: add the sampled points to the result

    Returns:
        summary, one gap curve per z0 and optionally the sample rows
    """
    if model not in MODELS:
        return {"error": f"Unknown model: {model}", "gaps": []}
    if samples < 2:
        return {"error": f"Need at least two samples: {samples}", "gaps": []}

    # Step 1: discretized orthonormal family
    if model == "op":
        basis = orthonormal_wedge_basis(alpha, gamma, n, grid_points)
    else:
        basis = coulomb_basis(n, grid_points)

    # Step 2: independent draws
    draws = sample_many(basis, samples, seed)

    # Step 3: gap statistics per reference point
    gaps = []
    for x, y in z0 or DEFAULT_Z0:
        stats = gap_statistics(draws, WedgePoint.from_xy(float(x), float(y)))
        gaps.append(stats.to_record())

    result = {
        "summary": {
            "model": model,
            "n": n,
            "samples": samples,
            "seed": seed,
            "grid_points": grid_points,
            "gram_deviation": basis.gram_deviation(),
        },
        "gaps": gaps,
    }
    if include_samples:
        result["samples"] = [row for draw in draws for row in draw.rows()]
    return result
