"""Orthogonal bases on the wedge: equal-weight and Jacobi-weight families"""

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np
from numpy.polynomial import polynomial as poly
from numpy.typing import ArrayLike, NDArray

from wedge_orthopoly.univariate.jacobi import (
    JacobiParams,
    eval_jacobi_shifted,
    jacobi_norm_h,
    jacobi_value_at_one,
    pochhammer,
)
from wedge_orthopoly.univariate.orthopoly import build_family
from wedge_orthopoly.univariate.weights import WeightSpec
from wedge_orthopoly.wedge.geometry import WedgeFunction, WedgePoint
from wedge_orthopoly.wedge.inner import WedgeWeights


@dataclass(frozen=True, eq=False)
class WedgeElement:
    """Basis element stored as u(x) + v(y), with its squared norm"""
    family: str
    degree: int
    u: Callable[[NDArray], NDArray]
    v: Callable[[NDArray], NDArray]
    norm: float

    def __call__(self, x: ArrayLike, y: ArrayLike) -> NDArray:
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        return self.u(x) + self.v(y)

    def on_top(self, x: ArrayLike) -> NDArray:
        x = np.asarray(x, dtype=float)
        return self.u(x) + self.v(np.ones_like(x))

    def on_right(self, y: ArrayLike) -> NDArray:
        y = np.asarray(y, dtype=float)
        return self.u(np.ones_like(y)) + self.v(y)

    def as_wedge_function(self) -> WedgeFunction:
        return WedgeFunction(self.on_top, self.on_right)

    def coefficients(self) -> NDArray:
        """Monomial coefficients c[i, j] of x^i y^j"""
        deg = max(self.degree, 0)
        nodes = 0.5 - 0.5 * np.cos(np.pi * (np.arange(deg + 1) + 0.5) / (deg + 1))
        cu = poly.polyfit(nodes, self.u(nodes), deg) if deg else np.array([self.u(nodes)[0]])
        cv = poly.polyfit(nodes, self.v(nodes), deg) if deg else np.array([self.v(nodes)[0]])
        c = np.zeros((deg + 1, deg + 1))
        c[:, 0] += cu
        c[0, :] += cv
        return c

    def label(self) -> str:
        return "1" if self.degree == 0 else f"{self.family}{self.degree}"


def _combine(first: WedgeElement, second: WedgeElement, rho: float, norm: float, family: str) -> WedgeElement:
    """first - rho * second"""
    return WedgeElement(
        family,
        first.degree,
        lambda x: first.u(x) - rho * second.u(x),
        lambda y: first.v(y) - rho * second.v(y),
        norm,
    )


class WedgeBasis:
    """Common indexing over [1; P_1, S_1; P_2, S_2; ...]"""

    weights: WedgeWeights
    second_family: str

    def P(self, n: int) -> WedgeElement:
        raise NotImplementedError

    def second(self, n: int) -> WedgeElement:
        raise NotImplementedError

    def elements(self, n_max: int) -> list[WedgeElement]:
        """Degree-ordered elements up to degree n_max"""
        out = [self.P(0)]
        for n in range(1, n_max + 1):
            out.extend([self.P(n), self.second(n)])
        return out

    def describe(self) -> dict:
        raise NotImplementedError


def dimension_wedge(n: int) -> int:
    """Orthogonal elements of exact degree n on the wedge"""
    if n < 0:
        raise ValueError(f"Negative degree: {n}")
    return 1 if n == 0 else 2


class EqualWeightBasis(WedgeBasis):
    """P_n, Q_n for the same weight w on both segments"""

    second_family = "Q"

    def __init__(self, w: WeightSpec, n_max: int):
        self.w = w
        self.n_max = n_max
        self.weights = WedgeWeights.equal(w)
        self.family = build_family(w, n_max)
        self.derived = build_family(w.derived(), max(n_max - 1, 0))

    def _check(self, n: int) -> None:
        if not 0 <= n <= self.n_max:
            raise IndexError(f"Degree {n} outside 0..{self.n_max}")

    def P(self, n: int) -> WedgeElement:
        self._check(n)
        p = self.family
        at_one = float(p.evaluate(n, 1.0))
        return WedgeElement(
            "P",
            n,
            lambda x: p.evaluate(n, x),
            lambda y: p.evaluate(n, y) - at_one,
            2 * float(p.norms[n]),
        )

    def Q(self, n: int) -> WedgeElement:
        self._check(n)
        if n < 1:
            raise IndexError("Q_n needs n >= 1")
        q = self.derived
        return WedgeElement(
            "Q",
            n,
            lambda x: (1 - x) * q.evaluate(n - 1, x),
            lambda y: -(1 - y) * q.evaluate(n - 1, y),
            2 * float(q.norms[n - 1]),
        )

    def second(self, n: int) -> WedgeElement:
        return self.Q(n)

    def describe(self) -> dict:
        p = self.w.params
        return {
            "weight": "jacobi" if p else "general",
            "alpha": float(p.alpha) if p else None,
            "gamma": float(p.gamma) if p else None,
            "sigma": 1.0,
        }


def integral_I(m: int, n: int, alpha, gamma):
    """c int P_n^{(g,a)} (1-x) P_{m-1}^{(g+2,a)} w_{a,g}"""
    if m < 1 or n < 0:
        raise ValueError(f"Need m >= 1, n >= 0: ({m}, {n})")
    if n > m:
        return 0
    if n == m:
        num = -m * pochhammer(gamma + 1, m) * pochhammer(alpha + 1, m)
        den = math.factorial(m) * (2 * m + gamma + alpha + 1) * pochhammer(gamma + alpha + 2, m)
        return num / den
    num = (gamma + 1) * pochhammer(alpha + 1, m - 1) * pochhammer(gamma + 1, n)
    return num / (pochhammer(gamma + alpha + 2, m) * math.factorial(n))


def cross_ipd_PQ(alpha, beta, gamma, n: int):
    """<P_n, Q_n> for the Jacobi wedge inner product"""
    if n < 1:
        raise ValueError(f"Need n >= 1: {n}")
    num = (beta - alpha) * pochhammer(gamma + 1, n + 1)
    den = (2 * n + gamma + alpha + 1) * (2 * n + gamma + beta + 1) * math.factorial(n - 1)
    return num / den


def q_prefactor(alpha, gamma, n: int):
    """(gamma+alpha+2)_n / (alpha+1)_{n-1}"""
    return pochhammer(gamma + alpha + 2, n) / pochhammer(alpha + 1, n - 1)


def _q_segment_norm(alpha, gamma, n: int, kappa) -> float:
    ratio = pochhammer(gamma + 1, 2) / pochhammer(alpha + gamma + 2, 2)
    return kappa**2 * ratio * jacobi_norm_h(n - 1, JacobiParams(alpha, gamma + 2))


def wedge_norm_P(alpha, beta, gamma, sigma, n: int):
    """h_n^{a,g} + sigma h_n^{b,g}"""
    return jacobi_norm_h(n, JacobiParams(alpha, gamma)) + sigma * jacobi_norm_h(n, JacobiParams(beta, gamma))


def wedge_norm_Q(alpha, beta, gamma, sigma, n: int, normalized: bool = True):
    """Squared norm of Q_n; normalized=False drops the prefactors"""
    ka = q_prefactor(alpha, gamma, n) if normalized else 1
    kb = q_prefactor(beta, gamma, n) if normalized else 1
    return _q_segment_norm(alpha, gamma, n, ka) + _q_segment_norm(beta, gamma, n, kb) / sigma


class JacobiWedgeBasis(WedgeBasis):
    """P_n, Q_n, R_n for c w_{a,g} on Top and sigma c w_{b,g} on Right"""

    def __init__(
        self,
        alpha: float,
        beta: float,
        gamma: float,
        sigma: float = 1.0,
        second: str = "auto",
        normalized_q: bool = True,
    ):
        if second not in ("auto", "Q", "R"):
            raise ValueError(f"Unknown second family: {second}")
        self.alpha, self.beta, self.gamma, self.sigma = alpha, beta, gamma, sigma
        self.weights = WedgeWeights.jacobi(alpha, beta, gamma, sigma)
        self.pa = JacobiParams(alpha, gamma)
        self.pb = JacobiParams(beta, gamma)
        self.normalized_q = normalized_q
        if second == "auto":
            second = "R" if alpha != beta else "Q"
        self.second_family = second
        self._cache: dict = {}

    def _kappa(self, n: int) -> tuple[float, float]:
        if not self.normalized_q:
            return 1.0, 1.0
        return (
            float(q_prefactor(self.alpha, self.gamma, n)),
            float(q_prefactor(self.beta, self.gamma, n)),
        )

    def P(self, n: int) -> WedgeElement:
        if n < 0:
            raise IndexError(f"Negative degree: {n}")
        key = ("P", n)
        if key not in self._cache:
            pa, pb = self.pa, self.pb
            at_one = jacobi_value_at_one(n, self.gamma)
            norm = float(wedge_norm_P(self.alpha, self.beta, self.gamma, self.sigma, n))
            self._cache[key] = WedgeElement(
                "P",
                n,
                lambda x: eval_jacobi_shifted(n, pa, x),
                lambda y: eval_jacobi_shifted(n, pb, y) - at_one,
                norm,
            )
        return self._cache[key]

    def Q(self, n: int) -> WedgeElement:
        if n < 1:
            raise IndexError("Q_n needs n >= 1")
        key = ("Q", n)
        if key not in self._cache:
            ka, kb = self._kappa(n)
            kb = kb / self.sigma
            qa, qb = self.pa.shifted(dgamma=2), self.pb.shifted(dgamma=2)
            norm = float(
                wedge_norm_Q(self.alpha, self.beta, self.gamma, self.sigma, n, self.normalized_q)
            )
            self._cache[key] = WedgeElement(
                "Q",
                n,
                lambda x: ka * (1 - x) * eval_jacobi_shifted(n - 1, qa, x),
                lambda y: -kb * (1 - y) * eval_jacobi_shifted(n - 1, qb, y),
                norm,
            )
        return self._cache[key]

    def cross(self, n: int) -> float:
        """<P_n, Q_n> in this basis' Q normalization"""
        ka, kb = self._kappa(n)
        return float(
            ka * integral_I(n, n, self.alpha, self.gamma)
            - kb * integral_I(n, n, self.beta, self.gamma)
        )

    def R(self, n: int) -> WedgeElement:
        key = ("R", n)
        if key not in self._cache:
            p, q = self.P(n), self.Q(n)
            cross = self.cross(n)
            rho = cross / p.norm
            self._cache[key] = _combine(q, p, rho, q.norm - cross * cross / p.norm, "R")
        return self._cache[key]

    def second(self, n: int) -> WedgeElement:
        return self.R(n) if self.second_family == "R" else self.Q(n)

    def describe(self) -> dict:
        return {
            "weight": "jacobi",
            "alpha": float(self.alpha),
            "beta": float(self.beta),
            "gamma": float(self.gamma),
            "sigma": float(self.sigma),
            "second_family": self.second_family,
        }


def _coords(pt: Union[WedgePoint, tuple]) -> tuple[float, float]:
    if isinstance(pt, WedgePoint):
        return pt.x, pt.y
    x, y = pt
    return x, y


def eval_P_equal(w: WeightSpec, n: int, pt) -> float:
    """p_n(w;x) + p_n(w;y) - p_n(w;1)"""
    return float(EqualWeightBasis(w, n).P(n)(*_coords(pt)))


def eval_Q_equal(w: WeightSpec, n: int, pt) -> float:
    """(1-x) p_{n-1}(phi w; x) - (1-y) p_{n-1}(phi w; y)"""
    return float(EqualWeightBasis(w, n).Q(n)(*_coords(pt)))


def eval_P_jacobi(alpha, beta, gamma, n: int, pt) -> float:
    return float(JacobiWedgeBasis(alpha, beta, gamma).P(n)(*_coords(pt)))


def eval_Q_jacobi(alpha, beta, gamma, sigma, n: int, pt) -> float:
    return float(JacobiWedgeBasis(alpha, beta, gamma, sigma).Q(n)(*_coords(pt)))


def eval_R_jacobi(alpha, beta, gamma, sigma, n: int, pt) -> float:
    return float(JacobiWedgeBasis(alpha, beta, gamma, sigma).R(n)(*_coords(pt)))
