"""Stieltjes transforms over the wedge contour, integrated segment by segment"""

import logging
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate

from wedge_orthopoly.operators.jacobi_operators import plain_basis
from wedge_orthopoly.univariate.jacobi import JacobiParams
from wedge_orthopoly.wedge.basis import WedgeElement
from wedge_orthopoly.wedge.geometry import Segment, as_wedge_function

logger = logging.getLogger(__name__)

MODES = ("forward", "olver", "olver-miller", "auto")

ON_CONTOUR_TOL = 1e-12
LIMIT_DELTA = 1e-8
ORACLE_LIMIT = 1000
ORACLE_EPSREL = 1e-13
ORACLE_EPSABS = 1e-15

# beyond this distance from [0,1] the Cauchy integral of w is smooth
_SMOOTH_DISTANCE = 0.5


class ContourError(Exception):
    """Point lies on the contour and no limit was requested"""
    pass


@dataclass(frozen=True)
class StieltjesQuery:
    """S[P_k w](z) for k <= k_max with beta = alpha, sigma = 1"""
    z: complex
    alpha: float = 0.0
    gamma: float = 0.0
    k_max: int = 10
    mode: str = "auto"
    limit: bool = False

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"Unknown mode: {self.mode}")
        if self.k_max < 0:
            raise ValueError(f"Negative degree: {self.k_max}")
        JacobiParams(self.alpha, self.gamma)
        object.__setattr__(self, "z", complex(self.z))


def contour_distance(z: complex) -> float:
    """Distance from z to {(t,1)} U {(1,t)}"""
    z = complex(z)
    top = abs(z - complex(min(max(z.real, 0.0), 1.0), 1.0))
    right = abs(z - complex(1.0, min(max(z.imag, 0.0), 1.0)))
    return min(top, right)


def outward_normal(z: complex) -> complex:
    """+i off the top segment, +1 off the right one, diagonal at the corner"""
    z = complex(z)
    if abs(z - (1 + 1j)) <= ON_CONTOUR_TOL:
        return (1 + 1j) / math.sqrt(2)
    top = abs(z - complex(min(max(z.real, 0.0), 1.0), 1.0))
    right = abs(z - complex(1.0, min(max(z.imag, 0.0), 1.0)))
    return 1j if top <= right else 1.0 + 0j


def _segment_map(segment: Segment, z: complex) -> tuple[complex, complex]:
    """(t*, factor) with 1 / (z - zeta(t)) = factor / (t* - t)"""
    if segment is Segment.TOP:
        return z - 1j, 1.0
    return -1j * (z - 1), -1j


def _complex_quad(fn: Callable[[float], complex], limit: int, **kwargs) -> complex:
    """Real and imaginary parts of int_0^1 fn by QUADPACK, relative tolerance only"""
    options = dict(epsabs=ORACLE_EPSABS, epsrel=ORACLE_EPSREL, limit=limit, **kwargs)
    re, _ = integrate.quad(lambda t: fn(t).real, 0, 1, **options)
    im, _ = integrate.quad(lambda t: fn(t).imag, 0, 1, **options)
    return complex(re, im)


def cauchy_weight_integral(t_star: complex, p: JacobiParams, limit: int = ORACLE_LIMIT) -> complex:
    """int_0^1 t^a (1-t)^g / (t* - t) dt"""
    a, g = float(p.alpha), float(p.gamma)
    gap = abs(t_star - min(max(t_star.real, 0.0), 1.0))

    if gap > _SMOOTH_DISTANCE:
        return _complex_quad(lambda t: 1 / (t_star - t), limit, weight="alg", wvar=(a, g))

    # subtract w(t_r) near the segment, integrate its log exactly
    t_r = min(max(t_star.real, 1e-8), 1 - 1e-8)
    w_r = float(p.weight(t_r))
    exact = w_r * (np.log(t_star) - np.log(t_star - 1))
    if a == 0 and g == 0:
        return complex(exact)

    def rest(t):
        return (float(p.weight(t)) - w_r) / (t_star - t)

    return complex(exact) + _complex_quad(rest, limit, points=[t_r])


def segment_integral(fn: Callable, p: JacobiParams, t_star: complex, limit: int = ORACLE_LIMIT) -> complex:
    """int_0^1 f(t) t^a (1-t)^g / (t* - t) dt for f real on [0,1]

    Far from [0,1] the algebraic weight goes to QUADPACK directly. Near it
    only f(t_r) is subtracted, so the pole is carried by
    cauchy_weight_integral and the remainder stays bounded.
    """
    gap = abs(t_star - min(max(t_star.real, 0.0), 1.0))

    def value(t):
        return float(fn(np.array([t]))[0])

    if gap > _SMOOTH_DISTANCE:
        a, g = float(p.alpha), float(p.gamma)
        return _complex_quad(lambda t: value(t) / (t_star - t), limit, weight="alg", wvar=(a, g))

    t_r = min(max(t_star.real, 1e-8), 1 - 1e-8)
    f_r = value(t_r)

    def rest(t):
        return float(p.weight(t)) * (value(t) - f_r) / (t_star - t)

    return _complex_quad(rest, limit, points=[t_r]) + f_r * cauchy_weight_integral(t_star, p, limit)


def _contour_transform(top: Callable, right: Callable, p: JacobiParams, z: complex, limit: int) -> complex:
    total = 0j
    for segment, fn in ((Segment.TOP, top), (Segment.RIGHT, right)):
        t_star, factor = _segment_map(segment, z)
        total += factor * segment_integral(fn, p, t_star, limit)
    return p.c * total


def _element_transform(element: WedgeElement, alpha: float, gamma: float, z: complex) -> complex:
    return _contour_transform(element.on_top, element.on_right, JacobiParams(alpha, gamma), z, ORACLE_LIMIT)


def _check_point(z: complex, limit: bool) -> None:
    if contour_distance(z) < ON_CONTOUR_TOL and not limit:
        raise ContourError(f"z={z} lies on the wedge; request the limit value")


def stieltjes_element(element: WedgeElement, alpha: float, gamma: float, z: complex, limit: bool = False) -> complex:
    """S[e w](z) for a polynomial wedge element, weight c w_{a,g} on both segments"""
    z = complex(z)
    _check_point(z, limit)
    if contour_distance(z) >= ON_CONTOUR_TOL:
        return _element_transform(element, alpha, gamma, z)

    # Richardson on z + delta n, z + 2 delta n
    n = outward_normal(z)
    near = _element_transform(element, alpha, gamma, z + LIMIT_DELTA * n)
    far = _element_transform(element, alpha, gamma, z + 2 * LIMIT_DELTA * n)
    return 2 * near - far


def stieltjes_base(alpha: float, gamma: float, z: complex, limit: bool = False) -> tuple[complex, complex, complex]:
    """S[P_0 w](z), S[P_1 w](z), S[Q_1 w](z)"""
    basis = plain_basis(alpha, gamma)
    return tuple(
        stieltjes_element(e, alpha, gamma, z, limit) for e in (basis.P(0), basis.P(1), basis.Q(1))
    )


def stieltjes_oracle(f, alpha: float, gamma: float, z: complex, limit: int = ORACLE_LIMIT) -> complex:
    """Adaptive segment quadrature of f c w / (z - s) for any function on the wedge"""
    z = complex(z)
    _check_point(z, False)
    f = as_wedge_function(f)
    return _contour_transform(f.top, f.right, JacobiParams(alpha, gamma), z, limit)
