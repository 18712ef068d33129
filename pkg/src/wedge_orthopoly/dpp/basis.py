"""Orthonormal families on a Clenshaw-Curtis discretization of the wedge"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray

from wedge_orthopoly.operators.jacobi_operators import plain_basis
from wedge_orthopoly.univariate.jacobi import JacobiParams
from wedge_orthopoly.univariate.quadrature import clenshaw_curtis_rule
from wedge_orthopoly.wedge.geometry import Segment, WedgePoint

logger = logging.getLogger(__name__)

GRID_POINTS = 2048
GRAM_TOL = 1e-6
RANK_TOL = 1e-12


class DiscretizationError(Exception):
    """Grid cannot represent the requested orthonormal family"""
    pass


def arc_coordinate(segment: Segment, t: ArrayLike) -> NDArray:
    """a = t on top, 2 - t on the right: a runs (0,1) -> (1,1) -> (1,0)"""
    t = np.asarray(t, dtype=float)
    return t if Segment(segment) is Segment.TOP else 2.0 - t


def from_arc(a: float) -> WedgePoint:
    if a <= 1.0:
        return WedgePoint(Segment.TOP, float(min(max(a, 0.0), 1.0)))
    return WedgePoint(Segment.RIGHT, float(min(max(2.0 - a, 0.0), 1.0)))


@dataclass
class DiscretizedBasis:
    """Values of q_0..q_{N-1} on a wedge grid, plus exact evaluation off it

    x, y, a: grid coordinates (a is the arc coordinate);
    mu: quadrature weights of the sampling measure;
    density: that measure's density in a, for inverse-CDF sampling;
    values: (grid, N) matrix of basis values.
    """
    name: str
    x: NDArray
    y: NDArray
    a: NDArray
    mu: NDArray
    density: NDArray
    values: NDArray
    evaluate: Callable[[WedgePoint], NDArray]
    measure: Callable[[WedgePoint], float]
    params: dict

    @property
    def size(self) -> int:
        return self.values.shape[1]

    def gram(self) -> NDArray:
        return (self.values.conj().T * self.mu) @ self.values

    def gram_deviation(self) -> float:
        return float(np.max(np.abs(self.gram() - np.eye(self.size))))

    def kernel_diagonal(self) -> NDArray:
        """K_N(x, x) on the grid"""
        return np.sum(np.abs(self.values) ** 2, axis=1)

    def kernel_trace(self) -> float:
        return float(self.mu @ self.kernel_diagonal())

    def kernel_matrix(self) -> NDArray:
        """K(x_i, x_j) = sum_k q_k(x_i) conj(q_k(x_j))"""
        return self.values @ self.values.conj().T

    def intensity(self, points: list[WedgePoint]) -> NDArray:
        """K_N(x,x) times the measure density at arbitrary points"""
        return np.array([np.sum(np.abs(self.evaluate(p)) ** 2) * self.measure(p) for p in points])


def _wedge_grid(grid_points: int) -> tuple[NDArray, NDArray, NDArray, NDArray]:
    """Arc-ordered grid (segment flags, t, a, CC weight in t)"""
    rule = clenshaw_curtis_rule(grid_points, (0.0, 1.0))
    t = np.concatenate([rule.nodes, rule.nodes[::-1]])
    top = np.concatenate([np.ones(grid_points, bool), np.zeros(grid_points, bool)])
    a = np.where(top, t, 2.0 - t)
    return top, t, a, np.concatenate([rule.weights, rule.weights[::-1]])


def _checked(basis: DiscretizedBasis) -> DiscretizedBasis:
    deviation = basis.gram_deviation()
    if deviation > GRAM_TOL:
        raise DiscretizationError(
            f"Discrete Gram deviates by {deviation:.3e}; refine the grid beyond {len(basis.a) // 2} points"
        )
    logger.debug("%s basis of size %d, Gram deviation %.3e", basis.name, basis.size, deviation)
    return basis


def orthonormal_wedge_basis(alpha: float, gamma: float, n: int, grid_points: int = GRID_POINTS) -> DiscretizedBasis:
    """First n of [P_0; P_1, Q_1; ...] (beta = alpha, sigma = 1) over their norms"""
    if n < 1:
        raise ValueError(f"Need at least one basis function: {n}")
    if alpha < 0 or gamma < 0:
        raise ValueError(f"Sampling grid needs bounded weights, got alpha={alpha}, gamma={gamma}")

    p = JacobiParams(alpha, gamma)
    elements = plain_basis(alpha, gamma).elements(n // 2)[:n]
    scale = np.array([1.0 / np.sqrt(e.norm) for e in elements])

    top, t, a, cc = _wedge_grid(grid_points)
    density = p.c * p.weight(t)
    values = np.empty((len(t), n))
    for k, e in enumerate(elements):
        values[:, k] = np.where(top, e.on_top(t), e.on_right(t)) * scale[k]

    def evaluate(pt: WedgePoint) -> NDArray:
        fn = "on_top" if pt.segment is Segment.TOP else "on_right"
        return np.array([float(getattr(e, fn)(np.array([pt.t]))[0]) for e in elements]) * scale

    def measure(pt: WedgePoint) -> float:
        return float(p.c * p.weight(pt.t))

    basis = DiscretizedBasis(
        name="wedge",
        x=np.where(top, t, 1.0),
        y=np.where(top, 1.0, t),
        a=a,
        mu=cc * density,
        density=density,
        values=values,
        evaluate=evaluate,
        measure=measure,
        params={"alpha": alpha, "beta": alpha, "gamma": gamma, "sigma": 1.0, "n": n, "grid_points": grid_points},
    )
    return _checked(basis)


def coulomb_basis(n: int, grid_points: int = GRID_POINTS) -> DiscretizedBasis:
    """Modified Gram-Schmidt on 1, z, z^2, ... in unweighted arc length"""
    if n < 1:
        raise ValueError(f"Need at least one basis function: {n}")

    top, t, a, cc = _wedge_grid(grid_points)
    z = np.where(top, t + 1j, 1.0 + 1j * t)
    powers = np.vander(z, n, increasing=True)

    values = np.empty((len(t), n), dtype=complex)
    # columns of coeffs express q_k in the monomials z^j
    coeffs = np.zeros((n, n), dtype=complex)
    for k in range(n):
        v = powers[:, k].copy()
        c = np.zeros(n, dtype=complex)
        c[k] = 1.0
        start = np.sqrt(np.real(cc @ np.abs(v) ** 2))
        for j in range(k):
            r = cc @ (v * values[:, j].conj())
            v -= r * values[:, j]
            c -= r * coeffs[:, j]
        norm = np.sqrt(np.real(cc @ np.abs(v) ** 2))
        if norm <= RANK_TOL * start:
            raise DiscretizationError(f"Rank lost at degree {k}")
        values[:, k] = v / norm
        coeffs[:, k] = c / norm

    def evaluate(pt: WedgePoint) -> NDArray:
        return np.vander(np.array([pt.z]), n, increasing=True)[0] @ coeffs

    def measure(pt: WedgePoint) -> float:
        return 1.0

    basis = DiscretizedBasis(
        name="coulomb",
        x=np.where(top, t, 1.0),
        y=np.where(top, 1.0, t),
        a=a,
        mu=cc,
        density=np.ones_like(t),
        values=values,
        evaluate=evaluate,
        measure=measure,
        params={"n": n, "grid_points": grid_points},
    )
    return _checked(basis)


def kernel_matrix(basis: DiscretizedBasis, points: Optional[list[WedgePoint]] = None) -> NDArray:
    """K_N(p_i, p_j) at arbitrary wedge points, or on the grid when points is None"""
    if points is None:
        return basis.kernel_matrix()
    phi = np.array([basis.evaluate(p) for p in points])
    return phi @ phi.conj().T
