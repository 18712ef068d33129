"""Gap probabilities around a wedge point from Monte Carlo samples"""

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from wedge_orthopoly.dpp.sampler import PointSample
from wedge_orthopoly.wedge.geometry import WedgePoint

logger = logging.getLogger(__name__)

CURVE_POINTS = 200


@dataclass
class GapStatistics:
    """Nearest top-segment distance to z0, scaled to unit standard deviation

    Samples with no top-segment point carry distance inf; they count as
    gaps at every radius.
    """
    z0: WedgePoint
    distances: NDArray
    unrestricted: NDArray
    scale: float
    grid: NDArray
    complement: NDArray

    @property
    def n_samples(self) -> int:
        return len(self.distances)

    @property
    def n_infinite(self) -> int:
        return int(np.sum(~np.isfinite(self.distances)))

    def rows(self) -> list[dict]:
        return [
            {
                "scaled_distance": float(r),
                "complement_ecdf": float(p),
                "n_samples": self.n_samples,
                "n_infinite": self.n_infinite,
            }
            for r, p in zip(self.grid, self.complement)
        ]

    def to_record(self) -> dict:
        return {
            "z0": [self.z0.x, self.z0.y],
            "scale": self.scale,
            "n_samples": self.n_samples,
            "n_infinite": self.n_infinite,
            "distances": [float(d) for d in self.distances],
            "unrestricted": [float(d) for d in self.unrestricted],
            "curve": self.rows(),
        }


def _nearest(points: list[WedgePoint], z0: WedgePoint) -> float:
    if not points:
        return np.inf
    return float(min(abs(p.z - z0.z) for p in points))


def complement_curve(scaled: NDArray, grid: NDArray) -> NDArray:
    """P(D > r) on the grid; infinite distances exceed every r"""
    return np.array([np.mean(scaled > r) for r in grid])


def gap_statistics(samples: list[PointSample], z0: WedgePoint, curve_points: int = CURVE_POINTS) -> GapStatistics:
    """Planar distance from z0 to the nearest point with y = 1, per sample"""
    if len(samples) < 2:
        raise ValueError(f"Need at least two samples: {len(samples)}")

    distances = np.array([_nearest(s.on_top(), z0) for s in samples])
    unrestricted = np.array([_nearest(s.points, z0) for s in samples])

    finite = distances[np.isfinite(distances)]
    spread = float(np.std(finite)) if len(finite) > 1 else 0.0
    scale = spread if spread > 0 else 1.0
    if len(finite) < len(distances):
        logger.info("%d of %d samples have no point on y = 1", len(distances) - len(finite), len(distances))

    scaled = distances / scale
    top = float(np.max(scaled[np.isfinite(scaled)])) if len(finite) else 1.0
    grid = np.linspace(0.0, top * 1.05 if top > 0 else 1.0, curve_points)
    return GapStatistics(z0, distances, unrestricted, scale, grid, complement_curve(scaled, grid))


def curve_distance(a: GapStatistics, b: GapStatistics) -> float:
    """Sup distance between two scaled complement curves on a common grid"""
    top = max(a.grid[-1], b.grid[-1])
    grid = np.linspace(0.0, top, max(len(a.grid), len(b.grid)))
    ca = complement_curve(a.distances / a.scale, grid)
    cb = complement_curve(b.distances / b.scale, grid)
    return float(np.max(np.abs(ca - cb)))
