"""Points and functions on the wedge {(x,1)} U {(1,y)}, x,y in [0,1]"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

CORNER_TOL = 1e-8
# step for the one-sided limit of divided differences at x = 1
ENDPOINT_STEP = 1e-5


class Segment(str, Enum):
    TOP = "top"
    RIGHT = "right"


@dataclass(frozen=True)
class WedgePoint:
    """Top t -> (t, 1); Right t -> (1, t)"""
    segment: Segment
    t: float

    def __post_init__(self):
        if not 0.0 <= self.t <= 1.0:
            raise ValueError(f"Parameter outside [0,1]: {self.t}")
        object.__setattr__(self, "segment", Segment(self.segment))

    @property
    def is_corner(self) -> bool:
        return self.t == 1.0

    @property
    def x(self) -> float:
        return self.t if self.segment is Segment.TOP else 1.0

    @property
    def y(self) -> float:
        return 1.0 if self.segment is Segment.TOP else self.t

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    def __eq__(self, other):
        if not isinstance(other, WedgePoint):
            return NotImplemented
        if self.is_corner and other.is_corner:
            return True
        return self.segment is other.segment and self.t == other.t

    def __hash__(self):
        if self.is_corner:
            return hash("corner")
        return hash((self.segment, self.t))

    @classmethod
    def from_xy(cls, x: float, y: float) -> "WedgePoint":
        if y == 1.0 and 0.0 <= x <= 1.0:
            return cls(Segment.TOP, float(x))
        if x == 1.0 and 0.0 <= y <= 1.0:
            return cls(Segment.RIGHT, float(y))
        raise ValueError(f"Point not on wedge: ({x}, {y})")


def one_sided_at_one(g: Callable[[NDArray], NDArray], x: ArrayLike) -> NDArray:
    """g(x), with x = 1 replaced by linear extrapolation from 1-h and 1-2h"""
    x = np.asarray(x, dtype=float)
    edge = x >= 1.0
    if not np.any(edge):
        return g(x)
    h = ENDPOINT_STEP
    inner = g(np.where(edge, 1 - h, x))
    outer = g(np.where(edge, 1 - 2 * h, x))
    return np.where(edge, 2 * inner - outer, inner)


def split_points(points: Sequence[WedgePoint]) -> tuple[NDArray, NDArray, NDArray]:
    """Parameters t, top mask, and (x, y) arrays for a point list"""
    t = np.array([p.t for p in points], dtype=float)
    top = np.array([p.segment is Segment.TOP for p in points], dtype=bool)
    return t, top, np.stack([np.where(top, t, 1.0), np.where(top, 1.0, t)])


class WedgeFunction:
    """Function on the wedge given by its two segment restrictions"""

    def __init__(self, top: Callable[[NDArray], NDArray], right: Callable[[NDArray], NDArray]):
        self._top = top
        self._right = right
        self._check_corner()

    @classmethod
    def from_xy(cls, f: Callable[[NDArray, NDArray], NDArray]) -> "WedgeFunction":
        return cls(lambda x: f(x, np.ones_like(x)), lambda y: f(np.ones_like(y), y))

    def _check_corner(self) -> None:
        one = np.array([1.0])
        f1 = float(np.asarray(self._top(one), dtype=float).ravel()[0])
        f2 = float(np.asarray(self._right(one), dtype=float).ravel()[0])
        if abs(f1 - f2) > CORNER_TOL * max(1.0, abs(f1)):
            raise ValueError(f"Corner mismatch: {f1:.6g} vs {f2:.6g}")
        self.corner = f1

    def top(self, x: ArrayLike) -> NDArray:
        """f_1(x) = f(x, 1)"""
        x = np.asarray(x, dtype=float)
        return np.broadcast_to(np.asarray(self._top(x), dtype=float), x.shape)

    def right(self, y: ArrayLike) -> NDArray:
        """f_2(y) = f(1, y)"""
        y = np.asarray(y, dtype=float)
        return np.broadcast_to(np.asarray(self._right(y), dtype=float), y.shape)

    def even(self, x: ArrayLike) -> NDArray:
        """f_e = (f_1 + f_2) / 2"""
        return 0.5 * (self.top(x) + self.right(x))

    def odd(self, x: ArrayLike) -> NDArray:
        """f_o = (f_1 - f_2) / (2 (1 - x)), one-sided limit at x = 1"""
        return one_sided_at_one(lambda t: 0.5 * (self.top(t) - self.right(t)) / (1 - t), x)

    def quotient_top(self, x: ArrayLike) -> NDArray:
        """g_1 = (f_1(x) - f(1,1)) / (1 - x)"""
        return one_sided_at_one(lambda t: (self.top(t) - self.corner) / (1 - t), x)

    def quotient_right(self, y: ArrayLike) -> NDArray:
        """g_2 = (f_2(y) - f(1,1)) / (1 - y)"""
        return one_sided_at_one(lambda t: (self.right(t) - self.corner) / (1 - t), y)

    def at(self, points: Union[WedgePoint, Sequence[WedgePoint]]) -> Union[float, NDArray]:
        if isinstance(points, WedgePoint):
            fn = self.top if points.segment is Segment.TOP else self.right
            return float(fn(np.array([points.t]))[0])
        t, top, _ = split_points(points)
        return np.where(top, self.top(t), self.right(t))


def as_wedge_function(f) -> WedgeFunction:
    """Accept a WedgeFunction, a basis element or a callable f(x, y)"""
    if isinstance(f, WedgeFunction):
        return f
    if hasattr(f, "as_wedge_function"):
        return f.as_wedge_function()
    return WedgeFunction.from_xy(f)
