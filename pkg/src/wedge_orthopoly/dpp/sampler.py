"""Sequential sampling of projection DPPs on the wedge"""

import logging
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from wedge_orthopoly.dpp.basis import DiscretizedBasis, arc_coordinate, from_arc
from wedge_orthopoly.wedge.geometry import Segment, WedgePoint

logger = logging.getLogger(__name__)

# deflated densities above -CLIP_TOL * max are clipped to zero
CLIP_TOL = 1e-10
ROUNDOFF = 1e-13


class SamplingError(Exception):
    """Deflated density went materially negative"""
    pass


@dataclass
class PointSample:
    """Exactly N points of one draw, in draw order"""
    points: list
    seed: int
    index: int = 0

    def __post_init__(self):
        if not all(isinstance(p, WedgePoint) for p in self.points):
            raise TypeError("Sample points must be WedgePoints")

    @property
    def size(self) -> int:
        return len(self.points)

    def on_top(self) -> list[WedgePoint]:
        return [p for p in self.points if p.segment is Segment.TOP]

    def rows(self) -> list[dict]:
        return [
            {"sample_id": self.index, "segment": p.segment.value, "t": p.t, "x": p.x, "y": p.y}
            for p in self.points
        ]


@dataclass
class _Deflation:
    """Orthonormal directions spanned by the drawn feature vectors"""
    directions: list = field(default_factory=list)

    def residual(self, phi: NDArray) -> NDArray:
        r = np.array(phi, dtype=complex)
        for e in self.directions:
            r = r - (e.conj() @ r) * e
        return r

    def add(self, phi: NDArray) -> float:
        # twice for orthogonality at large N
        r = self.residual(self.residual(phi))
        norm = float(np.linalg.norm(r))
        if norm > 0:
            self.directions.append(r / norm)
        return norm


def _draw_arc(a: NDArray, density: NDArray, u: float) -> float:
    """Inverse CDF with linear interpolation of the trapezoid cumulative sum"""
    cdf = np.concatenate([[0.0], np.cumsum(0.5 * (density[1:] + density[:-1]) * np.diff(a))])
    total = cdf[-1]
    if not total > 0:
        raise SamplingError("Deflated density has no mass left")
    target = u * total
    j = int(np.clip(np.searchsorted(cdf, target, side="right") - 1, 0, len(a) - 2))
    width = cdf[j + 1] - cdf[j]
    if width <= 0:
        return float(a[j])
    return float(a[j] + (target - cdf[j]) / width * (a[j + 1] - a[j]))


def _clip(residual: NDArray, step: int) -> NDArray:
    scale = np.max(np.abs(residual)) or 1.0
    worst = float(np.min(residual))
    if worst < -CLIP_TOL * scale:
        raise SamplingError(f"Deflated density {worst:.3e} at step {step}")
    if worst < -ROUNDOFF * scale:
        logger.warning("clipping deflated density %.3e at step %d", worst, step)
    return np.maximum(residual, 0.0)


def sample_dpp(basis: DiscretizedBasis, seed=None) -> PointSample:
    """Draw N points: density K(x,x)/N first, then Schur-deflated diagonals

    Deflating K <- K - K(., l) K(l, .) / K(l, l) is carried out on the feature
    vectors: the residual diagonal is |phi|^2 minus the squared projections
    onto an orthonormal basis of the drawn points' features.
    """
    rng = np.random.default_rng(seed)
    deflation = _Deflation()
    residual = basis.kernel_diagonal().astype(float)
    points = []

    for step in range(basis.size):
        dens = _clip(residual, step) * basis.density
        pt = from_arc(_draw_arc(basis.a, dens, rng.random()))
        points.append(pt)

        before = len(deflation.directions)
        deflation.add(basis.evaluate(pt))
        if len(deflation.directions) > before:
            e = deflation.directions[-1]
            residual = residual - np.abs(basis.values @ e.conj()) ** 2

    return PointSample(points, seed if isinstance(seed, int) else 0)


def sample_many(basis: DiscretizedBasis, n_samples: int, seed: int = 0) -> list[PointSample]:
    """Independent draws from per-sample streams spawned off one seed"""
    if n_samples < 1:
        raise ValueError(f"Need at least one sample: {n_samples}")
    streams = np.random.SeedSequence(seed).spawn(n_samples)
    samples = []
    for i, stream in enumerate(streams):
        sample = sample_dpp(basis, stream)
        sample.seed, sample.index = seed, i
        samples.append(sample)
    logger.info("drew %d %s samples of size %d", n_samples, basis.name, basis.size)
    return samples


def arc_positions(samples: list[PointSample]) -> NDArray:
    return np.array([float(arc_coordinate(p.segment, p.t)) for s in samples for p in s.points])
