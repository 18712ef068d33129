"""Univariate orthogonal families, kernels and partial sums"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray

from wedge_orthopoly.univariate.jacobi import eval_jacobi_table, jacobi_norm_h, monic_recurrence
from wedge_orthopoly.univariate.quadrature import QuadratureRule
from wedge_orthopoly.univariate.weights import WeightSpec

logger = logging.getLogger(__name__)

DEFAULT_GENERAL_POINTS = 512


class OrthogonalizationError(Exception):
    """Stieltjes procedure lost positivity of a norm"""

    def __init__(self, degree: int, message: str):
        super().__init__(message)
        self.degree = degree


@dataclass(frozen=True, eq=False)
class OrthoPoly1D:
    """Orthogonal family p_0..p_N for a weight on [0,1]"""
    weight: WeightSpec
    a: NDArray
    b: NDArray
    norms: NDArray
    kind: str
    nodes: NDArray
    mu: NDArray

    @property
    def max_degree(self) -> int:
        return len(self.norms) - 1

    def table(self, x: ArrayLike, n: Optional[int] = None) -> NDArray:
        """Values p_0..p_n at x, shape (n+1, *x.shape)"""
        n = self.max_degree if n is None else n
        if n > self.max_degree:
            raise ValueError(f"Degree {n} beyond family size")

        if self.kind == "jacobi":
            return eval_jacobi_table(n, self.weight.params, x)

        x = np.asarray(x, dtype=float)
        out = np.empty((n + 1,) + x.shape)
        out[0] = 1.0
        if n >= 1:
            out[1] = x - self.a[0]
        for k in range(1, n):
            out[k + 1] = (x - self.a[k]) * out[k] - self.b[k] * out[k - 1]
        return out

    def evaluate(self, n: int, x: ArrayLike) -> NDArray:
        return self.table(x, n)[n]


def _default_points(w: WeightSpec, n: int) -> int:
    if w.is_jacobi:
        return max(64, 4 * (n + 1))
    return max(DEFAULT_GENERAL_POINTS, 4 * (n + 1))


def jacobi_family(w: WeightSpec, n: int, n_points: Optional[int] = None) -> OrthoPoly1D:
    """P_k^{(gamma,alpha)}(2x-1), k <= n, with closed-form norms"""
    if not w.is_jacobi:
        raise ValueError("Jacobi family needs a Jacobi weight")

    p = w.params
    a, b = monic_recurrence(n + 1, p)
    scale = w.normalization / p.c
    norms = np.array([float(jacobi_norm_h(k, p)) * scale for k in range(n + 1)])
    nodes, mu = w.discrete_measure(n_points or _default_points(w, n))
    return OrthoPoly1D(w, a, b, norms, "jacobi", nodes, mu)


def stieltjes_procedure(
    w: WeightSpec,
    n: int,
    rule: Optional[QuadratureRule] = None,
    n_points: Optional[int] = None,
) -> OrthoPoly1D:
    """Discretized Stieltjes procedure for monic p_0..p_n"""
    if rule is not None:
        nodes, mu = rule.nodes, rule.weights * w(rule.nodes)
    else:
        nodes, mu = w.discrete_measure(n_points or _default_points(w, n))

    a = np.zeros(n + 1)
    b = np.zeros(n + 1)
    norms = np.zeros(n + 1)
    p_prev = np.zeros_like(nodes)
    p_curr = np.ones_like(nodes)

    for k in range(n + 1):
        h = float(mu @ (p_curr * p_curr))
        if k >= len(nodes) or not np.isfinite(h) or h <= 0:
            raise OrthogonalizationError(k, f"Norm breakdown at degree {k}")
        norms[k] = h
        a[k] = float(mu @ (nodes * p_curr * p_curr)) / h
        b[k] = h / norms[k - 1] if k else h
        p_prev, p_curr = p_curr, (nodes - a[k]) * p_curr - (b[k] if k else 0.0) * p_prev

    logger.debug("stieltjes procedure built degree %d on %d nodes", n, len(nodes))
    return OrthoPoly1D(w, a, b, norms, "monic", nodes, mu)


def build_family(w: WeightSpec, n: int) -> OrthoPoly1D:
    """Closed form for Jacobi weights, Stieltjes otherwise"""
    if w.is_jacobi:
        return jacobi_family(w, n)
    return stieltjes_procedure(w, n)


def kernel_1d(op: OrthoPoly1D, n: int, x: ArrayLike, y: ArrayLike) -> NDArray:
    """k_n(w; x, y) = sum_k p_k(x) p_k(y) / h_k"""
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    tx = op.table(x, n)
    ty = op.table(y, n)
    h = op.norms[: n + 1].reshape((-1,) + (1,) * x.ndim)
    return np.sum(tx * ty / h, axis=0)


@dataclass(frozen=True)
class Projection:
    """Fourier coefficients with a resolution flag"""
    coeffs: NDArray
    converged: bool


def _project(op: OrthoPoly1D, f: Callable, n: int, nodes: NDArray, mu: NDArray) -> NDArray:
    values = np.asarray(f(nodes), dtype=float)
    table = op.table(nodes, n)
    return table @ (mu * values) / op.norms[: n + 1]


def fourier_coefficients(op: OrthoPoly1D, f: Callable, n: int) -> Projection:
    """hat f_k = <f, p_k>_w / h_k for k <= n"""
    coeffs = _project(op, f, n, op.nodes, op.mu)
    nodes, mu = op.weight.discrete_measure(2 * len(op.nodes))
    check = _project(op, f, n, nodes, mu)

    scale = max(1.0, float(np.max(np.abs(coeffs))))
    converged = bool(np.max(np.abs(coeffs - check)) <= 1e-8 * scale)
    if not converged:
        logger.warning("projection of degree %d not resolved by quadrature", n)
    return Projection(coeffs, converged)


def partial_sum_1d(op: OrthoPoly1D, f: Callable, n: int, x: ArrayLike) -> NDArray:
    """s_n(w; f)(x)"""
    coeffs = fourier_coefficients(op, f, n).coeffs
    return np.tensordot(coeffs, op.table(x, n), axes=1)


def parseval_sums(op: OrthoPoly1D, f: Callable, n: int) -> tuple[NDArray, float]:
    """Running sums of |hat f_k|^2 h_k and the squared L2(w) norm"""
    coeffs = fourier_coefficients(op, f, n).coeffs
    values = np.asarray(f(op.nodes), dtype=float)
    return np.cumsum(coeffs**2 * op.norms[: n + 1]), float(op.mu @ values**2)
