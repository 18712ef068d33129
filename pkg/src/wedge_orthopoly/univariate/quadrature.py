"""Gauss-Jacobi and Clenshaw-Curtis rules"""

from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.linalg import LinAlgError
from numpy.typing import NDArray
from scipy.linalg import eig_banded

from wedge_orthopoly.univariate.jacobi import JacobiParams, monic_recurrence


class QuadratureError(Exception):
    """Quadrature could not produce a finite value"""
    pass


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights with a stated polynomial exactness"""
    nodes: NDArray
    weights: NDArray
    degree: int

    def __post_init__(self):
        if len(self.nodes) != len(self.weights):
            raise ValueError("Nodes and weights differ in length")

    def integrate(self, f: Callable[[NDArray], NDArray]) -> float:
        values = np.asarray(f(self.nodes))
        if not np.all(np.isfinite(values)):
            bad = self.nodes[~np.isfinite(values)][0]
            raise QuadratureError(f"Non-finite integrand at {bad:.6g}")
        return float(self.weights @ values)


def gauss_rule(n: int, p: JacobiParams, normalized: bool = True) -> QuadratureRule:
    """n-point Gauss rule for w_{alpha,gamma} on [0,1] (Golub-Welsch)"""
    if n < 1:
        raise ValueError(f"Rule size must be >= 1: {n}")

    a, b = monic_recurrence(n, p)
    band = np.vstack((np.sqrt(b), a))
    try:
        nodes, vectors = eig_banded(band)
    except LinAlgError as e:
        raise QuadratureError(f"Eigensolve failed for n={n}: {e}")

    weights = vectors[0, :] ** 2
    if not normalized:
        weights = weights / p.c
    return QuadratureRule(nodes, weights, 2 * n - 1)


def clenshaw_curtis_rule(n: int, interval: tuple[float, float] = (-1.0, 1.0)) -> QuadratureRule:
    """n-point Clenshaw-Curtis rule, nodes ascending"""
    if n < 2:
        raise ValueError(f"Rule size must be >= 2: {n}")

    m = n - 1
    theta = np.pi * np.arange(n) / m
    j = np.arange(1, m // 2 + 1)
    bj = np.where(2 * j == m, 1.0, 2.0)
    series = (bj / (4 * j * j - 1)) @ np.cos(2 * np.outer(j, theta))
    ck = np.full(n, 2.0)
    ck[[0, -1]] = 1.0
    weights = ck / m * (1 - series)

    lo, hi = interval
    nodes = lo + (hi - lo) * (1 - np.cos(theta)) / 2
    return QuadratureRule(nodes, weights * (hi - lo) / 2, m)
