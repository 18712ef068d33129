"""Orthogonal polynomials on the boundary of [-1,1]^2 from four wedge families"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray

from wedge_orthopoly.univariate.jacobi import JacobiParams
from wedge_orthopoly.univariate.quadrature import QuadratureError
from wedge_orthopoly.univariate.weights import WeightSpec
from wedge_orthopoly.wedge.basis import JacobiWedgeBasis, WedgeElement
from wedge_orthopoly.wedge.expansion import partial_sum_direct
from wedge_orthopoly.wedge.geometry import WedgeFunction, WedgePoint

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 64

# step for G = F / x at x = 0
_LIMIT_STEP = 1e-5


class Side(str, Enum):
    TOP = "top"
    BOTTOM = "bottom"
    LEFT = "left"
    RIGHT = "right"


HORIZONTAL = (Side.TOP, Side.BOTTOM)


@dataclass(frozen=True)
class BoundaryPoint:
    """Top (t,1), Bottom (t,-1), Left (-1,t), Right (1,t)"""
    side: Side
    t: float

    def __post_init__(self):
        if not -1.0 <= self.t <= 1.0:
            raise ValueError(f"Parameter outside [-1,1]: {self.t}")
        object.__setattr__(self, "side", Side(self.side))

    @property
    def x(self) -> float:
        if self.side in HORIZONTAL:
            return self.t
        return 1.0 if self.side is Side.RIGHT else -1.0

    @property
    def y(self) -> float:
        if self.side in HORIZONTAL:
            return 1.0 if self.side is Side.TOP else -1.0
        return self.t

    def __eq__(self, other):
        if not isinstance(other, BoundaryPoint):
            return NotImplemented
        return (self.x, self.y) == (other.x, other.y)

    def __hash__(self):
        return hash((self.x, self.y))

    @classmethod
    def from_xy(cls, x: float, y: float) -> "BoundaryPoint":
        if abs(y) == 1.0 and abs(x) <= 1.0:
            return cls(Side.TOP if y > 0 else Side.BOTTOM, float(x))
        if abs(x) == 1.0 and abs(y) <= 1.0:
            return cls(Side.RIGHT if x > 0 else Side.LEFT, float(y))
        raise ValueError(f"Point not on the square boundary: ({x}, {y})")


@dataclass(frozen=True)
class BoundaryWeights:
    """|x|^{2a+1}(1-x^2)^g on horizontal sides, |y|^{2b+1}(1-y^2)^g on vertical"""
    alpha: float
    beta: float
    gamma: float
    normalized: bool = True

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            if not getattr(self, name) > -1:
                raise ValueError(f"{name} must exceed -1: {getattr(self, name)}")

    def side_measure(self, horizontal: bool, order: int) -> tuple[NDArray, NDArray]:
        """Nodes in (0,1) and weights for int_{-1}^1 F(x) w(x) dx = sum mu [F(x) + F(-x)]"""
        a = self.alpha if horizontal else self.beta
        X, mu = WeightSpec.jacobi(a, self.gamma, self.normalized).discrete_measure(order)
        return np.sqrt(X), 0.5 * mu


def sigma_choice(d1: int, d2: int, w: BoundaryWeights) -> float:
    """c_{b,g} c_{a+d1,g} / (c_{a,g} c_{b+d2,g})"""
    if d1 not in (0, 1) or d2 not in (0, 1):
        raise ValueError(f"Shifts must be 0 or 1: ({d1}, {d2})")
    a, b, g = w.alpha, w.beta, w.gamma

    def c(e):
        return JacobiParams(e, g).c

    return c(b) * c(a + d1) / (c(a) * c(b + d2))


def _side_values(f: Callable, side: Side, t: NDArray) -> NDArray:
    one = np.ones_like(t)
    if side is Side.TOP:
        return np.asarray(f(t, one), dtype=float)
    if side is Side.BOTTOM:
        return np.asarray(f(t, -one), dtype=float)
    if side is Side.RIGHT:
        return np.asarray(f(one, t), dtype=float)
    return np.asarray(f(-one, t), dtype=float)


def inner_product_boundary(f: Callable, g: Callable, w: BoundaryWeights, order: Optional[int] = None) -> float:
    """Four-side weighted inner product; each side split at 0 and mapped by x -> x^2"""
    order = order or DEFAULT_ORDER
    total = 0.0
    for side in Side:
        r, mu = w.side_measure(side in HORIZONTAL, order)
        for t in (r, -r):
            values = _side_values(f, side, t) * _side_values(g, side, t)
            if not np.all(np.isfinite(values)):
                bad = t[~np.isfinite(values)][0]
                raise QuadratureError(f"Non-finite value on {side.value} at t={bad:.6g}")
            total += float(mu @ values)
    return total


@dataclass(frozen=True)
class ParityComponents:
    """F_{ee}, F_{eo}, F_{oe}, F_{oo} and the even quotients G_{d1 d2}"""
    F_ee: Callable
    F_eo: Callable
    F_oe: Callable
    F_oo: Callable
    G_00: Callable
    G_01: Callable
    G_10: Callable
    G_11: Callable

    def G(self, d1: int, d2: int) -> Callable:
        return {(0, 0): self.G_00, (0, 1): self.G_01, (1, 0): self.G_10, (1, 1): self.G_11}[(d1, d2)]

    def reconstruct(self, x: ArrayLike, y: ArrayLike) -> NDArray:
        """G_00 + y G_01 + x G_10 + x y G_11"""
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        return self.G_00(x, y) + y * self.G_01(x, y) + x * self.G_10(x, y) + x * y * self.G_11(x, y)


def _divide(F: Callable, by_x: bool) -> Callable:
    """F / x (or F / y) for F odd in that variable, one-sided limit at 0"""

    def quotient(x, y):
        x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        d = x if by_x else y
        small = np.abs(d) < _LIMIT_STEP
        safe = np.where(small, _LIMIT_STEP, d)
        xs, ys = (safe, y) if by_x else (x, safe)
        return np.asarray(F(xs, ys), dtype=float) / safe

    return quotient


def parity_split(f: Callable) -> ParityComponents:
    """Even/odd parts of f in each variable"""

    def part(sx: int, sy: int) -> Callable:
        def F(x, y):
            x = np.asarray(x, dtype=float)
            y = np.asarray(y, dtype=float)
            return 0.25 * (f(x, y) + sx * f(-x, y) + sy * f(x, -y) + sx * sy * f(-x, -y))

        return F

    F_ee, F_eo, F_oe, F_oo = part(1, 1), part(1, -1), part(-1, 1), part(-1, -1)
    return ParityComponents(
        F_ee, F_eo, F_oe, F_oo,
        G_00=F_ee,
        G_01=_divide(F_eo, by_x=False),
        G_10=_divide(F_oe, by_x=True),
        G_11=_divide(_divide(F_oo, by_x=True), by_x=False),
    )


@dataclass(frozen=True, eq=False)
class BoundaryElement:
    """Y_{n,i}(x,y) = x^{d1} y^{d2} p(x^2, y^2) for a wedge element p"""
    n: int
    i: int
    shift: tuple[int, int]
    wedge: WedgeElement
    norm: float

    def __call__(self, x: ArrayLike, y: ArrayLike) -> NDArray:
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        d1, d2 = self.shift
        return x**d1 * y**d2 * self.wedge(x * x, y * y)

    def label(self) -> str:
        return f"Y{self.n},{self.i}"

    def coefficients(self) -> NDArray:
        """Monomial coefficients c[i, j] of x^i y^j"""
        c = self.wedge.coefficients()
        d1, d2 = self.shift
        out = np.zeros((2 * c.shape[0] - 1 + d1, 2 * c.shape[1] - 1 + d2))
        out[d1::2, d2::2][: c.shape[0], : c.shape[1]] = c
        return out


def mixed_fourth_derivative(coeffs: NDArray) -> NDArray:
    """Coefficients of d_x^2 d_y^2 applied to sum c[i,j] x^i y^j"""
    i = np.arange(coeffs.shape[0])[:, None]
    j = np.arange(coeffs.shape[1])[None, :]
    scaled = coeffs * (i * (i - 1)) * (j * (j - 1))
    return scaled[2:, 2:]


def dimension_boundary(n: int) -> int:
    """n+1 for n <= 2, else 4"""
    if n < 0:
        raise ValueError(f"Negative degree: {n}")
    return n + 1 if n <= 2 else 4


def _generator(n: int, i: int) -> tuple[int, int, str, int]:
    """(d1, d2, family, wedge degree) for Y_{n,i}"""
    if not 1 <= i <= dimension_boundary(n):
        raise IndexError(f"No Y_{{{n},{i}}}: index must be in 1..{dimension_boundary(n)}")
    if n == 0:
        return 0, 0, "P", 0
    if n == 1:
        return (1, 0, "P", 0) if i == 1 else (0, 1, "P", 0)
    if n == 2:
        return [(0, 0, "P", 1), (1, 1, "P", 0), (0, 0, "S", 1)][i - 1]

    m = n // 2
    family = "P" if i in (1, 3) else "S"
    if n % 2 == 0:
        return (0, 0, family, m) if i <= 2 else (1, 1, family, m - 1)
    return (1, 0, family, m) if i <= 2 else (0, 1, family, m)


class BoundaryBasis:
    """Y_{n,i} for the weights w, with cached wedge sub-bases"""

    def __init__(self, w: BoundaryWeights):
        self.w = w
        self._wedge: dict = {}
        self._elements: dict = {}

    def wedge_basis(self, d1: int, d2: int) -> JacobiWedgeBasis:
        """Wedge family for (alpha+d1, beta+d2) with sigma_{d1,d2}"""
        key = (d1, d2)
        if key not in self._wedge:
            w = self.w
            self._wedge[key] = JacobiWedgeBasis(
                w.alpha + d1, w.beta + d2, w.gamma, sigma_choice(d1, d2, w)
            )
        return self._wedge[key]

    def scale(self, d1: int) -> float:
        """c_{a,g} / c_{a+d1,g}"""
        w = self.w
        return JacobiParams(w.alpha, w.gamma).c / JacobiParams(w.alpha + d1, w.gamma).c

    def Y(self, n: int, i: int) -> BoundaryElement:
        key = (n, i)
        if key not in self._elements:
            d1, d2, family, m = _generator(n, i)
            basis = self.wedge_basis(d1, d2)
            element = basis.P(m) if family == "P" else basis.second(m)
            norm = 2 * self.scale(d1) * element.norm
            self._elements[key] = BoundaryElement(n, i, (d1, d2), element, norm)
        return self._elements[key]

    def degree(self, n: int) -> list[BoundaryElement]:
        return [self.Y(n, i) for i in range(1, dimension_boundary(n) + 1)]

    def elements(self, n_max: int) -> list[BoundaryElement]:
        return [e for n in range(n_max + 1) for e in self.degree(n)]

    def describe(self) -> dict:
        w = self.w
        return {
            "weight": "boundary",
            "alpha": float(w.alpha),
            "beta": float(w.beta),
            "gamma": float(w.gamma),
        }


def eval_Y(n: int, i: int, w: BoundaryWeights, x: ArrayLike, y: ArrayLike):
    value = BoundaryBasis(w).Y(n, i)(x, y)
    return float(value) if np.ndim(value) == 0 else value


def boundary_basis(n: int, w: BoundaryWeights) -> list[BoundaryElement]:
    """Y_{n,1}, ..., Y_{n,dim} with norms"""
    return BoundaryBasis(w).degree(n)


def boundary_norm(n: int, i: int, w: BoundaryWeights) -> float:
    """<Y_{n,i}, Y_{n,i}> from the generating wedge norm"""
    if not w.normalized:
        raise ValueError("Closed-form norms assume normalized side weights")
    return BoundaryBasis(w).Y(n, i).norm


@dataclass
class BoundaryExpansion:
    """f ~ sum hat_f[n,i] Y_{n,i}"""
    coefficients: dict = field(default_factory=dict)
    norms: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)

    def to_record(self) -> dict:
        keys = sorted(self.coefficients)
        return {
            "params": self.params,
            "families": [f"Y{n},{i}" for n, i in keys],
            "coefficients": [float(self.coefficients[k]) for k in keys],
            "norms": [float(self.norms[k]) for k in keys],
            "parity": [_parity_tag(*_generator(n, i)[:2]) for n, i in keys],
        }


def _parity_tag(d1: int, d2: int) -> str:
    return ("o" if d1 else "e") + ("o" if d2 else "e")


def expand_boundary(f: Callable, w: BoundaryWeights, n: int, order: Optional[int] = None) -> BoundaryExpansion:
    """Direct Y-truncation coefficients <f, Y> / <Y, Y>"""
    basis = BoundaryBasis(w)
    order = order or 2 * (n + 8)
    coeffs, norms = {}, {}
    for e in basis.elements(n):
        norm = e.norm if w.normalized else inner_product_boundary(e, e, w, order)
        coeffs[(e.n, e.i)] = inner_product_boundary(f, e, w, order) / norm
        norms[(e.n, e.i)] = norm
    return BoundaryExpansion(coeffs, norms, basis.describe())


def evaluate_boundary_expansion(expansion: BoundaryExpansion, w: BoundaryWeights, x: ArrayLike, y: ArrayLike) -> NDArray:
    basis = BoundaryBasis(w)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    total = np.zeros(np.broadcast(x, y).shape)
    for (n, i), c in expansion.coefficients.items():
        total = total + c * basis.Y(n, i)(x, y)
    return total


def _wedge_image(G: Callable) -> WedgeFunction:
    """G o psi restricted to the wedge, psi(x,y) = (sqrt x, sqrt y)"""
    return WedgeFunction(
        lambda X: G(np.sqrt(X), np.ones_like(X)),
        lambda Y: G(np.ones_like(Y), np.sqrt(Y)),
    )


def _wedge_points(x: NDArray, y: NDArray) -> list[WedgePoint]:
    points = []
    for a, b in zip(x.ravel(), y.ravel()):
        BoundaryPoint.from_xy(a, b)
        X, Y = min(a * a, 1.0), min(b * b, 1.0)
        points.append(WedgePoint.from_xy(X, 1.0) if Y == 1.0 else WedgePoint.from_xy(1.0, Y))
    return points


def _orders(n: int) -> dict:
    """Wedge truncation degree per parity class; -1 means empty"""
    m = n // 2
    if n % 2 == 0:
        return {(0, 0): m, (0, 1): m - 1, (1, 0): m - 1, (1, 1): m - 1}
    return {(0, 0): m, (0, 1): m, (1, 0): m, (1, 1): m - 1}


def partial_sum_boundary(w: BoundaryWeights, f: Callable, n: int, x: ArrayLike, y: ArrayLike) -> NDArray:
    """S_n f at boundary points, assembled from four wedge partial sums"""
    if n < 0:
        raise ValueError(f"Negative degree: {n}")
    x = np.atleast_1d(np.asarray(x, dtype=float))
    y = np.atleast_1d(np.asarray(y, dtype=float))
    x, y = np.broadcast_arrays(x, y)
    points = _wedge_points(x, y)
    parts = parity_split(f)
    basis = BoundaryBasis(w)

    total = np.zeros(x.size)
    for (d1, d2), m in _orders(n).items():
        if m < 0:
            continue
        g = _wedge_image(parts.G(d1, d2))
        values = partial_sum_direct(basis.wedge_basis(d1, d2), g, m, points)
        total += x.ravel() ** d1 * y.ravel() ** d2 * values
        logger.debug("boundary partial sum: class (%d,%d) to degree %d", d1, d2, m)

    return total.reshape(x.shape)
