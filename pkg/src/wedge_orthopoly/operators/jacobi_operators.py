"""Block-tridiagonal Jacobi operators for the wedge basis with beta = alpha"""

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

from wedge_orthopoly.univariate.jacobi import JacobiParams, eval_jacobi_shifted
from wedge_orthopoly.wedge.basis import JacobiWedgeBasis

logger = logging.getLogger(__name__)

VALIDATION_TOL = 1e-8
VALIDATE_UP_TO = 12

Label = tuple[str, int]
Row = dict[Label, Union[float, Fraction]]


def labels(n: int) -> list[Label]:
    """Basis labels of exact degree n"""
    return [("P", 0)] if n == 0 else [("P", n), ("Q", n)]


def flat_index(label: Label) -> int:
    """Position in [P_0; P_1, Q_1; P_2, Q_2; ...]"""
    family, n = label
    if n == 0:
        return 0
    return 2 * n - 1 if family == "P" else 2 * n


def all_labels(n_max: int) -> list[Label]:
    return [lab for n in range(n_max + 1) for lab in labels(n)]


@dataclass
class CoeffVector:
    """Coefficients against [P_0; P_1, Q_1; ...]"""
    coeffs: NDArray

    def __post_init__(self):
        self.coeffs = np.asarray(self.coeffs)
        if len(self.coeffs) % 2 != 1:
            raise ValueError(f"Length must be odd: {len(self.coeffs)}")

    @property
    def degree(self) -> int:
        return (len(self.coeffs) - 1) // 2

    def block(self, n: int) -> NDArray:
        return self.coeffs[[flat_index(lab) for lab in labels(n)]]

    @classmethod
    def unit(cls, label: Label, n_max: int) -> "CoeffVector":
        c = np.zeros(2 * n_max + 1)
        c[flat_index(label)] = 1.0
        return cls(c)


@dataclass
class BlockTriDiag:
    """Rows x b_n = C_n b_{n-1} + A_n b_n + B_n b_{n+1} for degree blocks b_n"""
    C: list
    A: list
    B: list
    provenance: str = "closed-form"
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if not len(self.A) == len(self.B) == len(self.C):
            raise ValueError("Block lists differ in length")
        for n, (c, a, b) in enumerate(zip(self.C, self.A, self.B)):
            d = 1 if n == 0 else 2
            if a.shape != (d, d) or b.shape != (d, 2) or (n and c.shape != (2, 1 if n == 1 else 2)):
                raise ValueError(f"Inconsistent block shapes at degree {n}")

    @property
    def degree(self) -> int:
        return len(self.A) - 1

    def to_dense(self, n: Optional[int] = None) -> NDArray:
        """Row matrix truncated to degrees <= n"""
        n = self.degree if n is None else n
        if n > self.degree:
            raise ValueError(f"Truncation {n} beyond {self.degree}")
        dtype = complex if any(np.iscomplexobj(a) for a in self.A) else float
        M = np.zeros((2 * n + 1, 2 * n + 1), dtype=dtype)
        for k in range(n + 1):
            rows = [flat_index(lab) for lab in labels(k)]
            M[np.ix_(rows, rows)] = np.asarray(self.A[k], dtype=dtype)
            if k:
                cols = [flat_index(lab) for lab in labels(k - 1)]
                M[np.ix_(rows, cols)] = np.asarray(self.C[k], dtype=dtype)
            if k < n:
                cols = [flat_index(lab) for lab in labels(k + 1)]
                M[np.ix_(rows, cols)] = np.asarray(self.B[k], dtype=dtype)
        return M

    def apply(self, coeffs: Union[CoeffVector, ArrayLike]) -> CoeffVector:
        """Coefficients of x f from those of f"""
        c = coeffs.coeffs if isinstance(coeffs, CoeffVector) else np.asarray(coeffs)
        n = (len(c) - 1) // 2
        return CoeffVector(self.to_dense(n).T @ c)

    def complexify(self, other: "BlockTriDiag") -> "BlockTriDiag":
        """Blocks of self + i other"""
        return BlockTriDiag(
            [np.asarray(c, dtype=float) + 1j * np.asarray(d, dtype=float) for c, d in zip(self.C, other.C)],
            [np.asarray(a, dtype=float) + 1j * np.asarray(b, dtype=float) for a, b in zip(self.A, other.A)],
            [np.asarray(a, dtype=float) + 1j * np.asarray(b, dtype=float) for a, b in zip(self.B, other.B)],
            provenance=self.provenance,
            params=dict(self.params),
        )

    def export(self) -> dict:
        def encode(block):
            return [[str(v) if isinstance(v, Fraction) else float(v) for v in row] for row in block]

        return {
            "provenance": self.provenance,
            "params": self.params,
            "blocks": [
                {"n": n, "C": encode(c) if n else [], "A": encode(a), "B": encode(b)}
                for n, (c, a, b) in enumerate(zip(self.C, self.A, self.B))
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.export(), indent=2)


def plain_basis(alpha, gamma) -> JacobiWedgeBasis:
    """beta = alpha, sigma = 1, Q_n = (1-x) P_{n-1}^{(g+2,a)} - (1-y) P_{n-1}^{(g+2,a)}"""
    return JacobiWedgeBasis(float(alpha), float(alpha), float(gamma), 1.0, second="Q", normalized_q=False)


def _wedge_values(basis: JacobiWedgeBasis, label: Label, x, y) -> NDArray:
    family, n = label
    element = basis.P(n) if family == "P" else basis.Q(n)
    return element(x, y)


def vanish_combination(alpha, gamma, n: int, x: ArrayLike, y: ArrayLike, corrected: bool = False) -> NDArray:
    """(n+g+a+2) Q_{n+1} - (n+1) P_{n+1} - d_n Q_n + c_n P_n

    d_n = n+g and c_n = n+a+1 as printed in the literature; this form
    vanishes on x = 1 only when alpha = gamma. corrected=True swaps the
    exponents in both, d_n = n+a and c_n = n+g+1, and vanishes on x = 1
    for every (alpha, gamma).
    """
    if n < 0:
        raise ValueError(f"Negative degree: {n}")
    alpha, gamma = float(alpha), float(gamma)
    basis = plain_basis(alpha, gamma)
    s = alpha + gamma
    if corrected:
        d_n, c_n = n + alpha, n + gamma + 1
    else:
        d_n, c_n = n + gamma, n + alpha + 1
    value = (n + s + 2) * _wedge_values(basis, ("Q", n + 1), x, y)
    value = value - (n + 1) * _wedge_values(basis, ("P", n + 1), x, y)
    if n >= 1:
        value = value - d_n * _wedge_values(basis, ("Q", n), x, y)
    return value + c_n * _wedge_values(basis, ("P", n), x, y)


def vanish_rhs(alpha, gamma, n: int, x: ArrayLike, y: ArrayLike) -> NDArray:
    """2 (1-x) (2n+g+a+2) P_n^{(g+1,a)}(2x-1)"""
    x = np.asarray(x, dtype=float)
    p = JacobiParams(float(alpha), float(gamma) + 1)
    return 2 * (1 - x) * (2 * n + alpha + gamma + 2) * eval_jacobi_shifted(n, p, x)


def one_minus_x_closed(alpha, gamma, n: int, family: str) -> Row:
    """Coefficients of (1-x) P_n or (1-x) Q_n against neighbouring elements

    Exact when alpha and gamma are Fractions.
    """
    if family not in ("P", "Q"):
        raise ValueError(f"Unknown family: {family}")
    if n < 0 or (family == "Q" and n < 1):
        raise IndexError(f"No element {family}{n}")

    a, g = alpha, gamma
    s = a + g
    d0, d1, d2 = 2 * n + s, 2 * n + s + 1, 2 * n + s + 2
    row: Row = {}

    if family == "P" and n == 0:
        row[("Q", 1)] = Fraction(1, 2) if isinstance(s, Fraction) else 0.5
        row[("P", 1)] = -1 / (2 * (s + 2))
        row[("P", 0)] = (1 + g) / (2 * (s + 2))
        return row

    if family == "P":
        row[("Q", n + 1)] = (n + s + 1) * (n + s + 2) / (2 * d1 * d2)
        row[("P", n + 1)] = -(n + 1) * (n + s + 1) / (2 * d1 * d2)
        row[("Q", n)] = -(n + a) * (n + s + 1) / (d0 * d2)
        row[("P", n)] = (2 * n * n + 2 * n * (s + 1) + s * (g + 1)) / (2 * d0 * d2)
        if n >= 2:
            row[("Q", n - 1)] = (n + a) * (n + a - 1) / (2 * d1 * d0)
        row[("P", n - 1)] = -(n + a) * (n + g) / (2 * d1 * d0)
        return row

    row[("Q", n + 1)] = -n * (n + s + 2) / (2 * d2 * d1)
    row[("P", n + 1)] = n * (n + 1) / (2 * d2 * d1)
    row[("Q", n)] = (2 * n * n + 2 * n * (s + 1) + (s + 2) * (g + 1)) / (2 * d0 * d2)
    row[("P", n)] = -n * (n + g + 1) / (d0 * d2)
    if n >= 2:
        row[("Q", n - 1)] = -(n + g + 1) * (n + a - 1) / (2 * d0 * d1)
    row[("P", n - 1)] = (n + g + 1) * (n + g) / (2 * d0 * d1)
    return row


def one_minus_y_rows(alpha, gamma, n: int, family: str) -> Row:
    """(1-y) rows from P_n(x,y) = P_n(y,x) and Q_n(x,y) = -Q_n(y,x)"""
    row = one_minus_x_closed(alpha, gamma, n, family)
    flip = -1 if family == "Q" else 1
    return {lab: (-v if lab[0] == "Q" else v) * flip for lab, v in row.items()}


def _projection_matrix(alpha, gamma, n_max: int, factor: str, order: Optional[int] = None) -> NDArray:
    """M[j, i] = <m b_j, b_i> / <b_i, b_i> for m in {1-x, x, y}, degrees <= n_max + 1"""
    basis = plain_basis(alpha, gamma)
    elements = [basis.P(n) if fam == "P" else basis.Q(n) for fam, n in all_labels(n_max + 1)]
    (x1, m1), (x2, m2) = basis.weights.measures(order or n_max + 16)

    top = np.array([e.on_top(x1) for e in elements])
    right = np.array([e.on_right(x2) for e in elements])
    if factor == "1-x":
        f_top, f_right = 1 - x1, np.zeros_like(x2)
    elif factor == "x":
        f_top, f_right = x1, np.ones_like(x2)
    elif factor == "y":
        f_top, f_right = np.ones_like(x1), x2
    else:
        raise ValueError(f"Unknown multiplier: {factor}")

    gram = (top * f_top * m1) @ top.T + (right * f_right * m2) @ right.T
    norms = np.array([e.norm for e in elements])
    return gram / norms[None, :]


def one_minus_x_oracle(alpha, gamma, n: int, family: str, order: Optional[int] = None) -> Row:
    """Quadrature projections of (1-x) times an element, all degrees <= n + 2"""
    if n < 0 or (family == "Q" and n < 1):
        raise IndexError(f"No element {family}{n}")
    M = _projection_matrix(alpha, gamma, n + 1, "1-x", order)
    j = flat_index((family, n))
    return {lab: float(M[j, flat_index(lab)]) for lab in all_labels(n + 2)}


def multiplication_oracle(alpha, gamma, n_max: int, variable: str, order: Optional[int] = None) -> NDArray:
    """Dense row matrix of multiplication by x or y, degrees <= n_max + 1"""
    return _projection_matrix(alpha, gamma, n_max, variable, order)


def _row_deviation(closed: Row, oracle: Row) -> float:
    keys = set(closed) | set(oracle)
    return max(abs(float(closed.get(k, 0.0)) - float(oracle.get(k, 0.0))) for k in keys)


def validate_closed_forms(alpha, gamma, n_max: int, tol: float = VALIDATION_TOL) -> dict:
    """Per-row deviation of the closed (1-x) rows from quadrature projections"""
    M = _projection_matrix(alpha, gamma, n_max + 1, "1-x")
    rows = []
    for lab in all_labels(n_max):
        j = flat_index(lab)
        oracle = {col: float(M[j, flat_index(col)]) for col in all_labels(n_max + 2)}
        closed = one_minus_x_closed(alpha, gamma, lab[1], lab[0])
        rows.append({"row": f"{lab[0]}{lab[1]}", "max_deviation": _row_deviation(closed, oracle)})

    worst = max(r["max_deviation"] for r in rows)
    report = {
        "alpha": float(alpha),
        "gamma": float(gamma),
        "n_max": n_max,
        "rows": rows,
        "max_deviation": worst,
        "passed": bool(worst < tol),
    }
    logger.info("closed forms at alpha=%s gamma=%s: max deviation %.3e", alpha, gamma, worst)
    return report


@lru_cache(maxsize=64)
def _closed_forms_valid(alpha: float, gamma: float, n_max: int) -> bool:
    return validate_closed_forms(alpha, gamma, n_max)["passed"]


def _assemble(rows: dict[Label, Row], n_max: int, provenance: str, params: dict) -> BlockTriDiag:
    C, A, B = [], [], []
    for n in range(n_max + 1):
        here = labels(n)

        def block(cols):
            out = [[rows[r].get(c, 0) for c in cols] for r in here]
            if any(isinstance(v, Fraction) for line in out for v in line):
                return np.array(out, dtype=object)
            return np.array(out, dtype=float)

        C.append(block(labels(n - 1)) if n else np.zeros((1, 0)))
        A.append(block(here))
        B.append(block(labels(n + 1)))
    return BlockTriDiag(C, A, B, provenance, params)


def _closed_rows(alpha, gamma, n_max: int, variable: str) -> dict[Label, Row]:
    rows = {}
    for lab in all_labels(n_max):
        fam, n = lab
        r = one_minus_x_closed(alpha, gamma, n, fam) if variable == "x" else one_minus_y_rows(alpha, gamma, n, fam)
        # x = 1 - (1-x)
        rows[lab] = {k: -v for k, v in r.items()}
        rows[lab][lab] = rows[lab].get(lab, 0) + 1
    return rows


def _oracle_rows(alpha, gamma, n_max: int, variable: str) -> dict[Label, Row]:
    M = multiplication_oracle(alpha, gamma, n_max, variable)
    return {
        lab: {col: float(M[flat_index(lab), flat_index(col)]) for col in all_labels(n_max + 1)}
        for lab in all_labels(n_max)
    }


def build_jacobi_operators(
    alpha,
    gamma,
    n_max: int,
    source: str = "auto",
    validate_up_to: int = VALIDATE_UP_TO,
) -> tuple[BlockTriDiag, BlockTriDiag]:
    """J_x and J_y for degrees <= n_max

    source is 'auto', 'closed-form' or 'oracle'; auto validates the closed
    rows at degrees <= validate_up_to and falls back to the oracle.
    """
    if source not in ("auto", "closed-form", "oracle"):
        raise ValueError(f"Unknown source: {source}")
    if n_max < 1:
        raise ValueError(f"Need n_max >= 1: {n_max}")

    if source == "auto":
        valid = _closed_forms_valid(float(alpha), float(gamma), min(n_max, validate_up_to))
        source = "closed-form" if valid else "oracle"
        if not valid:
            logger.warning("closed forms rejected at alpha=%s gamma=%s, using quadrature", alpha, gamma)

    if source == "oracle":
        alpha, gamma = float(alpha), float(gamma)
    params = {"alpha": float(alpha), "beta": float(alpha), "gamma": float(gamma), "sigma": 1.0}
    build = _closed_rows if source == "closed-form" else _oracle_rows
    jx = _assemble(build(alpha, gamma, n_max, "x"), n_max, source, params)
    jy = _assemble(build(alpha, gamma, n_max, "y"), n_max, source, params)
    return jx, jy
