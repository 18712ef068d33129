"""Shifted Jacobi polynomials P_n^{(gamma,alpha)}(2x-1) on [0,1]"""

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import gammaln


def pochhammer(a, n: int):
    """Rising factorial a(a+1)...(a+n-1)"""
    if n < 0:
        raise ValueError(f"Negative order: {n}")
    return math.prod((a + k for k in range(n)), start=1)


@dataclass(frozen=True)
class JacobiParams:
    """Exponents of w(x) = x^alpha (1-x)^gamma on [0,1]"""
    alpha: float
    gamma: float

    def __post_init__(self):
        if not self.alpha > -1 or not self.gamma > -1:
            raise ValueError(f"Exponents must exceed -1: {self}")

    @property
    def c(self) -> float:
        """Normalization making c * w a probability weight"""
        a, g = float(self.alpha), float(self.gamma)
        return math.exp(gammaln(g + a + 2) - gammaln(g + 1) - gammaln(a + 1))

    def shifted(self, dalpha=0, dgamma=0) -> "JacobiParams":
        return JacobiParams(self.alpha + dalpha, self.gamma + dgamma)

    def weight(self, x: ArrayLike) -> NDArray:
        x = np.asarray(x, dtype=float)
        return x ** float(self.alpha) * (1 - x) ** float(self.gamma)


def jacobi_normalization(p: JacobiParams) -> float:
    """c_{alpha,gamma} = G(g+a+2) / (G(g+1) G(a+1))"""
    return p.c


def jacobi_norm_h(n: int, p: JacobiParams):
    """Squared norm of P_n^{(g,a)}(2x-1) against c * w"""
    if n < 0:
        raise ValueError(f"Negative degree: {n}")
    if n == 0:
        # c * w has unit mass; the closed form is 0/0 when alpha+gamma = -1
        return 1.0
    a, g = p.alpha, p.gamma
    num = pochhammer(g + 1, n) * pochhammer(a + 1, n) * (n + g + a + 1)
    den = math.factorial(n) * pochhammer(g + a + 2, n) * (2 * n + g + a + 1)
    return num / den


def leading_coefficient(n: int, p: JacobiParams) -> float:
    """Coefficient of x^n in P_n^{(g,a)}(2x-1)"""
    s = float(p.alpha + p.gamma)
    return float(pochhammer(n + s + 1, n)) / math.factorial(n)


def jacobi_value_at_one(n: int, gamma) -> float:
    """P_n^{(gamma,.)}(1) = binomial(n+gamma, n)"""
    return float(pochhammer(gamma + 1, n)) / math.factorial(n)


def eval_jacobi_table(n_max: int, p: JacobiParams, x: ArrayLike) -> NDArray:
    """Rows P_0..P_{n_max} of P_k^{(g,a)}(2x-1) by forward recurrence"""
    if n_max < 0:
        raise ValueError(f"Negative degree: {n_max}")
    t = 2 * np.asarray(x, dtype=float) - 1
    a, b = float(p.gamma), float(p.alpha)
    table = np.empty((n_max + 1,) + t.shape)
    table[0] = 1.0
    if n_max == 0:
        return table
    table[1] = 0.5 * ((a + b + 2) * t + (a - b))

    for n in range(2, n_max + 1):
        s = 2 * n + a + b
        a1 = 2 * n * (n + a + b) * (s - 2)
        a2 = (s - 1) * (a * a - b * b)
        a3 = (s - 1) * s * (s - 2)
        a4 = 2 * (n + a - 1) * (n + b - 1) * s
        table[n] = ((a2 + a3 * t) * table[n - 1] - a4 * table[n - 2]) / a1

    return table


def eval_jacobi_shifted(n: int, p: JacobiParams, x: ArrayLike) -> NDArray:
    """Value of P_n^{(gamma,alpha)}(2x-1)"""
    return eval_jacobi_table(n, p, x)[n]


def monic_recurrence(n: int, p: JacobiParams) -> tuple[NDArray, NDArray]:
    """Monic recurrence (a_k, b_k), k < n, for w_{alpha,gamma} on [0,1]"""
    a, b = float(p.gamma), float(p.alpha)
    ak = np.empty(n)
    bk = np.empty(n)
    for k in range(n):
        s = 2 * k + a + b
        if k == 0:
            ak[k] = (b - a) / (a + b + 2)
            bk[k] = 1.0
        else:
            ak[k] = (b * b - a * a) / (s * (s + 2))
            if k == 1:
                bk[k] = 4 * (1 + a) * (1 + b) / ((2 + a + b) ** 2 * (3 + a + b))
            else:
                bk[k] = (
                    4 * k * (k + a) * (k + b) * (k + a + b)
                    / (s * s * (s + 1) * (s - 1))
                )
    # map [-1,1] to [0,1]; b_0 is the normalized mass
    bk = bk / 4
    if n:
        bk[0] = 1.0
    return (ak + 1) / 2, bk
