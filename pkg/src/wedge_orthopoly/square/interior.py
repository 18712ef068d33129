"""Orthogonal system on [-1,1]^2 for W(x,y) = w(max{|x|,|y|})"""

import logging
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import integrate

from wedge_orthopoly.square.boundary import (
    BoundaryBasis,
    HORIZONTAL,
    BoundaryWeights,
    Side,
    dimension_boundary,
)
from wedge_orthopoly.univariate.jacobi import JacobiParams
from wedge_orthopoly.univariate.orthopoly import OrthoPoly1D, stieltjes_procedure
from wedge_orthopoly.univariate.quadrature import QuadratureError
from wedge_orthopoly.univariate.weights import WeightSpec

logger = logging.getLogger(__name__)

# unweighted boundary measure d sigma
ANGULAR = BoundaryWeights(-0.5, -0.5, 0.0)
ANGULAR_MEASURE = BoundaryWeights(-0.5, -0.5, 0.0, normalized=False)
ANGULAR_C = JacobiParams(-0.5, 0.0).c

ROUND_TRIP_TOL = 1e-14


@dataclass(frozen=True)
class SquareRadialCoords:
    """(x, y) = (s xi, s eta), s = max{|x|,|y|}"""
    s: float
    xi: float
    eta: float

    def __post_init__(self):
        if not 0.0 < self.s <= 1.0:
            raise ValueError(f"Radius outside (0,1]: {self.s}")
        if abs(max(abs(self.xi), abs(self.eta)) - 1.0) > ROUND_TRIP_TOL:
            raise ValueError(f"Direction not on the boundary: ({self.xi}, {self.eta})")

    @property
    def xy(self) -> tuple[float, float]:
        return self.s * self.xi, self.s * self.eta


def to_radial(x: float, y: float) -> SquareRadialCoords:
    s = max(abs(x), abs(y))
    if s == 0.0:
        raise ValueError("Origin has no boundary direction")
    return SquareRadialCoords(s, x / s, y / s)


def radial_weight(w: WeightSpec, power: int) -> WeightSpec:
    """t^power w(t) on [0,1]"""
    if w.is_jacobi:
        return WeightSpec(params=w.params.shifted(dalpha=power), normalization=w.normalization)
    func = w.func
    return WeightSpec.general(lambda t: t**power * func(t), w.normalization)


def boundary_nodes(order: int) -> tuple[NDArray, NDArray, NDArray]:
    """Nodes (xi, eta) and weights of d sigma, eight half-sides"""
    xi, eta, mu = [], [], []
    for side in Side:
        r, m = ANGULAR_MEASURE.side_measure(side in HORIZONTAL, order)
        fixed = 1.0 if side in (Side.TOP, Side.RIGHT) else -1.0
        for t in (r, -r):
            across = np.full_like(t, fixed)
            if side in HORIZONTAL:
                xi.append(t)
                eta.append(across)
            else:
                xi.append(across)
                eta.append(t)
            mu.append(m)
    return np.concatenate(xi), np.concatenate(eta), np.concatenate(mu)


def tensor_grid(w: WeightSpec, radial_order: int, angular_order: int) -> tuple[NDArray, NDArray, NDArray]:
    """Points (x, y) and weights for int_0^1 s w(s) int_B f(s xi, s eta) d sigma ds"""
    s, rho = radial_weight(w, 1).discrete_measure(radial_order)
    xi, eta, mu = boundary_nodes(angular_order)
    x = np.outer(s, xi).ravel()
    y = np.outer(s, eta).ravel()
    return x, y, np.outer(rho, mu).ravel()


def inner_product_square(
    f: Callable,
    g: Callable,
    w: WeightSpec,
    radial_order: int = 32,
    angular_order: int = 32,
) -> float:
    """<f, g>_W by tensor quadrature in (s, xi, eta)"""
    x, y, weights = tensor_grid(w, radial_order, angular_order)
    values = np.asarray(f(x, y), dtype=float) * np.asarray(g(x, y), dtype=float)
    if not np.all(np.isfinite(values)):
        k = np.flatnonzero(~np.isfinite(values))[0]
        raise QuadratureError(f"Non-finite value at ({x[k]:.6g}, {y[k]:.6g})")
    return float(weights @ values)


def integrate_square_direct(f: Callable, w: WeightSpec, epsabs: float = 1e-13) -> float:
    """int int f W over the eight triangles where max{|x|,|y|} is smooth"""

    def weight(t):
        return float(w(np.array([t]))[0])

    total = 0.0
    for sx in (1.0, -1.0):
        for sy in (1.0, -1.0):
            # |y| <= |x|: s = |x|
            val, _ = integrate.dblquad(
                lambda v, u: f(sx * u, sy * v) * weight(u), 0.0, 1.0, 0.0, lambda u: u,
                epsabs=epsabs, epsrel=epsabs,
            )
            total += val
            # |x| <= |y|: s = |y|
            val, _ = integrate.dblquad(
                lambda u, v: f(sx * u, sy * v) * weight(v), 0.0, 1.0, 0.0, lambda v: v,
                epsabs=epsabs, epsrel=epsabs,
            )
            total += val
    return total


def check_index(n: int, k: int, i: int) -> None:
    if not 0 <= k <= n:
        raise IndexError(f"Need 0 <= k <= n: (n={n}, k={k})")
    if not 1 <= i <= dimension_boundary(n - k):
        raise IndexError(f"Index i={i} outside 1..{dimension_boundary(n - k)} for n-k={n - k}")


def interior_indices(n_max: int) -> list[tuple[int, int, int]]:
    """(n, k, i) in degree order"""
    return [
        (n, k, i)
        for n in range(n_max + 1)
        for k in range(n + 1)
        for i in range(1, dimension_boundary(n - k) + 1)
    ]


class InteriorBasis:
    """Q^n_{k,i} = P_{k,2n-2k}(s) s^{n-k} Y_{n-k,i}(x/s, y/s)"""

    def __init__(self, w: WeightSpec, n_max: int):
        self.w = w
        self.n_max = n_max
        self.angular = BoundaryBasis(ANGULAR)
        self._radial: dict = {}

    def radial(self, m: int) -> OrthoPoly1D:
        """Monic family for t^{2m+1} w(t), degrees up to n_max - m"""
        if m not in self._radial:
            self._radial[m] = stieltjes_procedure(radial_weight(self.w, 2 * m + 1), self.n_max - m)
            logger.debug("radial family for parameter %d built", 2 * m)
        return self._radial[m]

    def _check(self, n: int, k: int, i: int) -> None:
        check_index(n, k, i)
        if n > self.n_max:
            raise IndexError(f"Degree {n} beyond {self.n_max}")

    def evaluate(self, n: int, k: int, i: int, x: ArrayLike, y: ArrayLike) -> NDArray:
        self._check(n, k, i)
        x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        m = n - k
        s = np.maximum(np.abs(x), np.abs(y))
        origin = s == 0.0
        safe = np.where(origin, 1.0, s)
        angular = self.angular.Y(m, i)(x / safe, y / safe)
        # s^m Y_m(x/s, y/s) -> Y_{0,1} at the origin for m = 0, else 0
        angular = np.where(origin, angular if m == 0 else 0.0, angular)
        return self.radial(m).evaluate(k, s) * s**m * angular

    def radial_norm(self, n: int, k: int) -> float:
        return float(self.radial(n - k).norms[k])

    def angular_norm(self, m: int, i: int) -> float:
        """int_B Y^2 d sigma"""
        return self.angular.Y(m, i).norm / ANGULAR_C

    def norm(self, n: int, k: int, i: int) -> float:
        self._check(n, k, i)
        return self.radial_norm(n, k) * self.angular_norm(n - k, i)


def eval_Q_interior(n: int, k: int, i: int, w: WeightSpec, x: ArrayLike, y: ArrayLike):
    value = InteriorBasis(w, n).evaluate(n, k, i, x, y)
    return float(value) if np.ndim(value) == 0 else value


def interior_norm(n: int, k: int, i: int, w: WeightSpec) -> float:
    """Radial norm times angular norm"""
    return InteriorBasis(w, n).norm(n, k, i)


def _orders(n_max: int) -> tuple[int, int]:
    return n_max + 8, n_max + 8


def gram_interior(w: WeightSpec, n_max: int) -> NDArray:
    """Gram matrix of all Q^n_{k,i}, n <= n_max, by tensor quadrature"""
    basis = InteriorBasis(w, n_max)
    x, y, weights = tensor_grid(w, *_orders(n_max))
    values = np.array([basis.evaluate(n, k, i, x, y) for n, k, i in interior_indices(n_max)])
    return (values * weights) @ values.T


@dataclass
class InteriorExpansion:
    """f ~ sum hat_f[n,k,i] Q^n_{k,i}"""
    coefficients: dict = field(default_factory=dict)
    norms: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)

    def to_record(self) -> dict:
        keys = sorted(self.coefficients)
        return {
            "params": self.params,
            "families": [f"Q{n},{k},{i}" for n, k, i in keys],
            "indices": [list(key) for key in keys],
            "coefficients": [float(self.coefficients[key]) for key in keys],
            "norms": [float(self.norms[key]) for key in keys],
        }


def expand_interior(f: Callable, w: WeightSpec, n_max: int) -> InteriorExpansion:
    """<f, Q> / <Q, Q> for every element of degree <= n_max"""
    basis = InteriorBasis(w, n_max)
    radial_order, angular_order = _orders(n_max)
    x, y, weights = tensor_grid(w, radial_order + 8, angular_order + 8)
    fx = np.asarray(f(x, y), dtype=float)
    if not np.all(np.isfinite(fx)):
        raise QuadratureError("Non-finite function values on the tensor grid")

    coeffs, norms = {}, {}
    for key in interior_indices(n_max):
        norm = basis.norm(*key)
        coeffs[key] = float(weights @ (fx * basis.evaluate(*key, x, y))) / norm
        norms[key] = norm

    params = {"weight": "jacobi" if w.is_jacobi else "general", "n_max": n_max}
    return InteriorExpansion(coeffs, norms, params)


def evaluate_interior_expansion(expansion: InteriorExpansion, w: WeightSpec, x: ArrayLike, y: ArrayLike) -> NDArray:
    n_max = max(n for n, _, _ in expansion.coefficients)
    basis = InteriorBasis(w, n_max)
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    total = np.zeros(x.shape)
    for key, c in expansion.coefficients.items():
        total = total + c * basis.evaluate(*key, x, y)
    return total
