"""Weight functions on [0,1]"""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray

from wedge_orthopoly.univariate.jacobi import JacobiParams
from wedge_orthopoly.univariate.quadrature import clenshaw_curtis_rule, gauss_rule


@dataclass(frozen=True)
class WeightSpec:
    """Jacobi or general weight times a normalization constant"""
    params: Optional[JacobiParams] = None
    func: Optional[Callable[[NDArray], NDArray]] = None
    normalization: float = 1.0

    def __post_init__(self):
        if (self.params is None) == (self.func is None):
            raise ValueError("Give exactly one of params or func")
        if not self.normalization > 0:
            raise ValueError("Normalization must be positive")

    @classmethod
    def jacobi(cls, alpha: float, gamma: float, normalized: bool = True) -> "WeightSpec":
        params = JacobiParams(alpha, gamma)
        return cls(params=params, normalization=params.c if normalized else 1.0)

    @classmethod
    def general(cls, func: Callable[[NDArray], NDArray], normalization: float = 1.0) -> "WeightSpec":
        return cls(func=func, normalization=normalization)

    @property
    def is_jacobi(self) -> bool:
        return self.params is not None

    def __call__(self, x: ArrayLike) -> NDArray:
        x = np.asarray(x, dtype=float)
        if self.is_jacobi:
            return self.normalization * self.params.weight(x)
        return self.normalization * np.asarray(self.func(x), dtype=float)

    def derived(self) -> "WeightSpec":
        """phi w(x) = (1-x)^2 w(x)"""
        if self.is_jacobi:
            return WeightSpec(params=self.params.shifted(dgamma=2), normalization=self.normalization)
        func = self.func
        return WeightSpec(func=lambda x: (1 - x) ** 2 * func(x), normalization=self.normalization)

    def discrete_measure(self, n_points: int) -> tuple[NDArray, NDArray]:
        """Nodes and weights with sum(w_i g(x_i)) ~ int g w"""
        if self.is_jacobi:
            rule = gauss_rule(n_points, self.params)
            return rule.nodes, rule.weights * (self.normalization / self.params.c)
        rule = clenshaw_curtis_rule(max(n_points, 2), (0.0, 1.0))
        return rule.nodes, rule.weights * self(rule.nodes)

    def mass(self, n_points: int = 64) -> float:
        _, weights = self.discrete_measure(n_points)
        return float(np.sum(weights))
