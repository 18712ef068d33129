"""Fourier expansions, kernels and convergence diagnostics on the wedge"""

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np
from numpy.typing import NDArray

from wedge_orthopoly.univariate.orthopoly import build_family, kernel_1d, partial_sum_1d
from wedge_orthopoly.univariate.weights import WeightSpec
from wedge_orthopoly.wedge.basis import EqualWeightBasis, JacobiWedgeBasis, WedgeBasis
from wedge_orthopoly.wedge.geometry import WedgePoint, as_wedge_function, split_points
from wedge_orthopoly.wedge.inner import gram_matrix

logger = logging.getLogger(__name__)

Points = Union[WedgePoint, Sequence[WedgePoint]]


def _order(n: int) -> int:
    return 2 * (n + 8)


@dataclass
class WedgeExpansion:
    """f ~ hat_f0 + sum_n hat_P[n] P_n + hat_second[n] S_n"""
    hat_f0: float
    hat_P: list = field(default_factory=list)
    hat_second: list = field(default_factory=list)
    family: str = "Q"
    norms: list = field(default_factory=list)
    params: dict = field(default_factory=dict)

    @property
    def degree(self) -> int:
        return len(self.hat_P)

    def coefficients(self) -> NDArray:
        """Flat vector in [1; P_1, S_1; ...] order"""
        out = [self.hat_f0]
        for p, s in zip(self.hat_P, self.hat_second):
            out.extend([p, s])
        return np.array(out)

    def to_record(self) -> dict:
        return {
            "params": self.params,
            "families": ["1"] + [tag for n in range(1, self.degree + 1) for tag in (f"P{n}", f"{self.family}{n}")],
            "coefficients": [float(c) for c in self.coefficients()],
            "norms": [float(h) for h in self.norms],
        }


def expand_wedge(f, basis: WedgeBasis, n: int, order: Optional[int] = None) -> WedgeExpansion:
    """Coefficients <f, b> / <b, b> for all elements up to degree n"""
    elements = basis.elements(n)
    f = as_wedge_function(f)
    (x1, m1), (x2, m2) = basis.weights.measures(order or _order(n))
    f_top, f_right = f.top(x1), f.right(x2)

    coeffs = []
    for e in elements:
        ip = m1 @ (f_top * e.on_top(x1)) + m2 @ (f_right * e.on_right(x2))
        coeffs.append(float(ip) / e.norm)

    return WedgeExpansion(
        hat_f0=coeffs[0],
        hat_P=coeffs[1::2],
        hat_second=coeffs[2::2],
        family=basis.second_family,
        norms=[e.norm for e in elements],
        params=basis.describe(),
    )


def evaluate_expansion(expansion: WedgeExpansion, basis: WedgeBasis, n: int, points: Points) -> NDArray:
    """Truncation S_n at wedge points"""
    single = isinstance(points, WedgePoint)
    _, _, (x, y) = split_points([points] if single else points)
    coeffs = expansion.coefficients()[: 2 * n + 1]
    total = sum(c * e(x, y) for c, e in zip(coeffs, basis.elements(n)))
    return float(total[0]) if single else total


def partial_sum_direct(basis: WedgeBasis, f, n: int, points: Points, order: Optional[int] = None):
    """S_n f by truncating the orthogonal expansion"""
    return evaluate_expansion(expand_wedge(f, basis, n, order), basis, n, points)


def partial_sum_wedge(basis: WedgeBasis, f, n: int, points: Points):
    """S_n f, through f_e / f_o for equal weights"""
    if not isinstance(basis, EqualWeightBasis):
        return partial_sum_direct(basis, f, n, points)

    single = isinstance(points, WedgePoint)
    t, top, _ = split_points([points] if single else points)
    f = as_wedge_function(f)

    even = partial_sum_1d(basis.family, f.even, n, t)
    odd = (1 - t) * partial_sum_1d(basis.derived, f.odd, n - 1, t) if n >= 1 else np.zeros_like(t)
    values = np.where(top, even + odd, even - odd)
    return float(values[0]) if single else values


def kernel_wedge(basis: WedgeBasis, n: int, p1: WedgePoint, p2: WedgePoint) -> float:
    """Reproducing kernel K_n(p1, p2) for equal weights"""
    if not isinstance(basis, EqualWeightBasis):
        raise ValueError("Kernel formula needs equal weights")

    x, y = p1.t, p2.t
    value = 0.5 * float(kernel_1d(basis.family, n, x, y))
    if n >= 1:
        sign = 1.0 if p1.segment is p2.segment else -1.0
        value += sign * 0.5 * (1 - x) * (1 - y) * float(kernel_1d(basis.derived, n - 1, x, y))
    return value


def kernel_spectral(basis: WedgeBasis, n: int, p1: WedgePoint, p2: WedgePoint) -> float:
    """sum_b b(p1) b(p2) / <b, b> over elements of degree <= n"""
    total = 0.0
    for e in basis.elements(n):
        total += float(e(p1.x, p1.y)) * float(e(p2.x, p2.y)) / e.norm
    return total


def _error_1d(w: WeightSpec, g, n: int, order: int) -> float:
    """||g - s_n(w; g)||^2_w, with s_{-1} = 0"""
    nodes, mu = w.discrete_measure(order)
    values = np.asarray(g(nodes), dtype=float)
    if n < 0:
        return float(mu @ values**2)
    family = build_family(w, n)
    approx = partial_sum_1d(family, g, n, nodes)
    return float(mu @ (values - approx) ** 2)


def _wedge_error(basis: WedgeBasis, f, n: int, order: int) -> float:
    expansion = expand_wedge(f, basis, n, order)
    f = as_wedge_function(f)
    (x1, m1), (x2, m2) = basis.weights.measures(order)
    coeffs = expansion.coefficients()
    elements = basis.elements(n)
    top = f.top(x1) - sum(c * e.on_top(x1) for c, e in zip(coeffs, elements))
    right = f.right(x2) - sum(c * e.on_right(x2) for c, e in zip(coeffs, elements))
    return float(m1 @ top**2 + m2 @ right**2)


def convergence_report(basis: WedgeBasis, f, n_max: int, order: Optional[int] = None) -> list[dict]:
    """Per-degree squared errors of S_n f and their 1-D bounds"""
    f = as_wedge_function(f)
    order = order or _order(n_max) + 32
    rows = []

    for n in range(n_max + 1):
        row = {"n": n, "wedge_error": _wedge_error(basis, f, n, order)}

        if isinstance(basis, EqualWeightBasis):
            w = basis.w
            row["identity_error"] = 2 * (
                _error_1d(w, f.even, n, order) + _error_1d(w.derived(), f.odd, n - 1, order)
            )
        elif isinstance(basis, JacobiWedgeBasis):
            a, b, g = basis.alpha, basis.beta, basis.gamma
            row["top_error"] = _error_1d(WeightSpec.jacobi(a, g), f.top, n, order)
            row["right_error"] = _error_1d(WeightSpec.jacobi(b, g), f.right, n, order)
            row["top_quotient_error"] = _error_1d(
                WeightSpec.jacobi(a, g + 2), f.quotient_top, n - 1, order
            )
            row["right_quotient_error"] = _error_1d(
                WeightSpec.jacobi(b, g + 2), f.quotient_right, n - 1, order
            )

        rows.append(row)
        logger.debug("convergence row %s", row)

    return rows


def decay_rate(rows: list[dict], column: str, n_min: int = 2) -> float:
    """Slope of log(error) against log(n) over n >= n_min"""
    pts = [(r["n"], r[column]) for r in rows if r["n"] >= n_min and r[column] > 0]
    if len(pts) < 2:
        raise ValueError("Too few positive rows for a fit")
    n, err = np.array(pts).T
    slope, _ = np.polyfit(np.log(n), np.log(err), 1)
    return float(slope)


def wedge_gram(basis: WedgeBasis, n: int, order: Optional[int] = None) -> NDArray:
    return gram_matrix(basis.elements(n), basis.weights, order or _order(n))

