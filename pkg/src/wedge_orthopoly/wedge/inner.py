"""Two-segment inner product on the wedge"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
from numpy.typing import NDArray

from wedge_orthopoly.univariate.quadrature import QuadratureError
from wedge_orthopoly.univariate.weights import WeightSpec
from wedge_orthopoly.wedge.geometry import Segment, as_wedge_function

DEFAULT_ORDER = 64


@dataclass(frozen=True)
class WedgeWeights:
    """w1 on Top, sigma * w2 on Right"""
    w1: WeightSpec
    w2: WeightSpec
    sigma: float = 1.0

    def __post_init__(self):
        if not self.sigma > 0:
            raise ValueError(f"Sigma must be positive: {self.sigma}")

    @classmethod
    def equal(cls, w: WeightSpec) -> "WedgeWeights":
        return cls(w, w, 1.0)

    @classmethod
    def jacobi(cls, alpha, beta, gamma, sigma=1.0, normalized: bool = True) -> "WedgeWeights":
        return cls(
            WeightSpec.jacobi(alpha, gamma, normalized),
            WeightSpec.jacobi(beta, gamma, normalized),
            sigma,
        )

    def measures(self, order: int) -> tuple[tuple[NDArray, NDArray], tuple[NDArray, NDArray]]:
        """Discrete measures for Top and Right, sigma folded into Right"""
        x1, m1 = self.w1.discrete_measure(order)
        x2, m2 = self.w2.discrete_measure(order)
        return (x1, m1), (x2, self.sigma * m2)


def _checked(values: NDArray, nodes: NDArray, segment: Segment) -> NDArray:
    values = np.asarray(values, dtype=float)
    if not np.all(np.isfinite(values)):
        bad = nodes[~np.isfinite(values)][0]
        raise QuadratureError(f"Non-finite value on {segment.value} at t={bad:.6g}")
    return values


def inner_product_wedge(f, g, w: WedgeWeights, order: Optional[int] = None) -> float:
    """<f, g> = int f g w1 (Top) + sigma int f g w2 (Right)"""
    f = as_wedge_function(f)
    g = as_wedge_function(g)
    (x1, m1), (x2, m2) = w.measures(order or DEFAULT_ORDER)

    top = _checked(f.top(x1) * g.top(x1), x1, Segment.TOP)
    right = _checked(f.right(x2) * g.right(x2), x2, Segment.RIGHT)
    return float(m1 @ top + m2 @ right)


def gram_matrix(elements: list, w: WedgeWeights, order: Optional[int] = None) -> NDArray:
    """Gram matrix of wedge elements under the two-segment rule"""
    (x1, m1), (x2, m2) = w.measures(order or DEFAULT_ORDER)
    top = np.array([_checked(e.on_top(x1), x1, Segment.TOP) for e in elements])
    right = np.array([_checked(e.on_right(x2), x2, Segment.RIGHT) for e in elements])
    return (top * m1) @ top.T + (right * m2) @ right.T
