"""Stieltjes transforms of the wedge OPs from the three-term block recurrence

z S_n = C_n S_{n-1} + A_n S_n + B_n S_{n+1}, n >= 1, with blocks of J_x + i J_y.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np
from numpy.linalg import LinAlgError
from numpy.typing import NDArray

from wedge_orthopoly.operators.jacobi_operators import BlockTriDiag, all_labels, build_jacobi_operators
from wedge_orthopoly.stieltjes.transform import (
    StieltjesQuery,
    contour_distance,
    stieltjes_base,
)

logger = logging.getLogger(__name__)

RTOL = 1e-12
N_CAP = 4000
AUTO_THRESHOLD = 0.1
MILLER_RCOND = 1e-12
FORWARD_COND_LIMIT = 1e14


class ConvergenceError(Exception):
    """Olver truncation did not settle below the cap"""
    pass


class ConditioningError(Exception):
    """A block or boundary system is numerically singular"""
    pass


@dataclass
class StieltjesResult:
    """values[k] holds S[P_k w] (k = 0) or (S[P_k w], S[Q_k w])"""
    z: complex
    values: list
    mode: str
    n: int = 0
    est_error: Optional[float] = None
    params: dict = field(default_factory=dict)

    @property
    def k_max(self) -> int:
        return len(self.values) - 1

    def flat(self) -> NDArray:
        """Ordered as P_0, P_1, Q_1, P_2, Q_2, ..."""
        return np.concatenate([np.asarray(v, dtype=complex).ravel() for v in self.values])

    def rows(self) -> list[dict]:
        out = []
        for k, (label, value) in enumerate(zip(_flat_labels(self.k_max), self.flat())):
            out.append({
                "re_z": self.z.real,
                "im_z": self.z.imag,
                "k": k,
                "label": label,
                "re_S": float(value.real),
                "im_S": float(value.imag),
                "mode": self.mode,
                "est_error": self.est_error,
            })
        return out

    def to_record(self) -> dict:
        return {
            "z": [self.z.real, self.z.imag],
            "mode": self.mode,
            "n": self.n,
            "est_error": self.est_error,
            "params": self.params,
            "values": [[float(v.real), float(v.imag)] for v in self.flat()],
        }


@dataclass
class TailSolution:
    """Columns of q_k for each tail, q_0 = start"""
    q: list
    n: int
    tails: list


def _flat_labels(k_max: int) -> list[str]:
    return [f"{fam}{n}" for fam, n in all_labels(k_max)]


@lru_cache(maxsize=32)
def z_operator(alpha: float, gamma: float, n_max: int) -> BlockTriDiag:
    """Blocks of J_x + i J_y up to degree n_max"""
    jx, jy = build_jacobi_operators(alpha, gamma, max(n_max, 1))
    return jx.complexify(jy)


def _shifted(jz: BlockTriDiag, k: int, z: complex) -> NDArray:
    return jz.A[k] - z * np.eye(jz.A[k].shape[0])


def recurrence_residual(jz: BlockTriDiag, z: complex, values: Sequence) -> NDArray:
    """Relative residual of each interior recurrence row"""
    out = []
    for k in range(1, len(values) - 1):
        r = jz.C[k] @ values[k - 1] + _shifted(jz, k, z) @ values[k] + jz.B[k] @ values[k + 1]
        scale = max(np.linalg.norm(values[k]), np.finfo(float).tiny)
        out.append(np.linalg.norm(r) / scale)
    return np.array(out)


def block_thomas(lower: list, diag: list, upper: list, rhs: list) -> list:
    """Solve L_k x_{k-1} + D_k x_k + U_k x_{k+1} = r_k, block LU then back substitution"""
    m = len(diag)
    d_prime, r_prime = [None] * m, [None] * m
    d_prime[0], r_prime[0] = diag[0], rhs[0]
    try:
        for k in range(1, m):
            g = np.linalg.solve(d_prime[k - 1].T, lower[k].T).T
            d_prime[k] = diag[k] - g @ upper[k - 1]
            r_prime[k] = rhs[k] - g @ r_prime[k - 1]

        x = [None] * m
        x[-1] = np.linalg.solve(d_prime[-1], r_prime[-1])
        for k in range(m - 2, -1, -1):
            x[k] = np.linalg.solve(d_prime[k], r_prime[k] - upper[k] @ x[k + 1])
    except LinAlgError as e:
        raise ConditioningError(f"Singular pivot block in elimination: {e}")
    return x


def solve_tails(
    jz: BlockTriDiag,
    z: complex,
    n: int,
    tails: Sequence[NDArray],
    start: Optional[NDArray] = None,
) -> TailSolution:
    """q_0 = start (default 1), q_n = tail; rows k = 1..n-1 of the homogeneous recurrence"""
    if n < 2:
        raise ValueError(f"Truncation must be >= 2: {n}")
    m = len(tails)
    end = np.stack([np.asarray(t, dtype=complex) for t in tails], axis=1)
    first = np.ones((1, m), dtype=complex) if start is None else np.asarray(start, dtype=complex).reshape(1, m)

    lower, diag, upper, rhs = [], [], [], []
    for k in range(1, n):
        lower.append(jz.C[k])
        diag.append(_shifted(jz, k, z))
        upper.append(jz.B[k])
        r = np.zeros((2, m), dtype=complex)
        if k == 1:
            r -= jz.C[1] @ first
        if k == n - 1:
            r -= jz.B[k] @ end
        rhs.append(r)

    q = block_thomas(lower, diag, upper, rhs)
    return TailSolution([first] + q + [end], n, list(tails))


def _params(query: StieltjesQuery) -> dict:
    return {"alpha": query.alpha, "beta": query.alpha, "gamma": query.gamma, "sigma": 1.0}


def forward_recurrence(query: StieltjesQuery, base: Optional[tuple] = None) -> StieltjesResult:
    """Step S_{n+1} = B_n^{-1} ((z - A_n) S_n - C_n S_{n-1}) from the three base values"""
    z = query.z
    s0, s1p, s1q = base if base is not None else stieltjes_base(query.alpha, query.gamma, z, query.limit)
    values = [np.array([s0]), np.array([s1p, s1q])][: query.k_max + 1]
    jz = z_operator(query.alpha, query.gamma, query.k_max)

    for n in range(1, query.k_max):
        B = jz.B[n]
        if not np.isfinite(np.linalg.cond(B)) or np.linalg.cond(B) > FORWARD_COND_LIMIT:
            raise ConditioningError(f"B_{n} is numerically singular")
        step = -_shifted(jz, n, z) @ values[n] - jz.C[n] @ values[n - 1]
        values.append(np.linalg.solve(B, step))

    return StieltjesResult(z, values, "forward", query.k_max, params=_params(query))


def _olver_values(jz: BlockTriDiag, z: complex, n: int, k_max: int) -> list:
    q = solve_tails(jz, z, n, [np.zeros(2)]).q
    return [np.asarray(q[k][:, 0]) for k in range(k_max + 1)]


def _change(new: list, old: list) -> float:
    diff = max(np.max(np.abs(a - b)) for a, b in zip(new, old))
    scale = max(np.max(np.abs(a)) for a in new)
    return diff / scale if scale else diff


def olver_solve(
    query: StieltjesQuery,
    rtol: float = RTOL,
    n_cap: int = N_CAP,
    base: Optional[complex] = None,
) -> StieltjesResult:
    """Minimal solution from q_0 = 1 and a zero tail; only S[P_0 w] is needed

    The truncation doubles until successive ratios agree to rtol.
    """
    z = query.z
    s0 = base if base is not None else stieltjes_base(query.alpha, query.gamma, z, query.limit)[0]
    n = max(2 * (query.k_max + 1), 16)
    previous, change = None, np.inf

    while n <= n_cap:
        jz = z_operator(query.alpha, query.gamma, n)
        current = _olver_values(jz, z, n, query.k_max)
        if previous is not None:
            change = _change(current, previous)
            logger.debug("olver n=%d change %.3e", n, change)
            if change <= rtol:
                values = [s0 * q for q in current]
                return StieltjesResult(
                    z, values, "olver", n, est_error=change * abs(s0), params=_params(query)
                )
        previous = current
        n *= 2

    raise ConvergenceError(f"Olver truncation not converged by n={n_cap} at z={z}: change {change:.3e}")


def olver_miller_solve(
    query: StieltjesQuery,
    n: Optional[int] = None,
    base: Optional[tuple] = None,
) -> StieltjesResult:
    """Match S[P_0 w], S[P_1 w], S[Q_1 w] at a fixed truncation

    The zero-tail solution from q_0 = 1 carries S[P_0 w]; two solutions from
    q_0 = 0 with unit tails absorb the mismatch at degree 1. Their degree-1
    values shrink geometrically in n, so the 2x2 matching system is column
    scaled and solved by truncated SVD: directions below MILLER_RCOND times
    the largest singular value belong to tails that decay too fast to be
    resolved and keep the zero-tail value.
    """
    z = query.z
    n = n or max(2 * query.k_max, 16)
    if n <= query.k_max:
        raise ValueError(f"Truncation {n} must exceed k_max {query.k_max}")
    s0, s1p, s1q = base if base is not None else stieltjes_base(query.alpha, query.gamma, z, query.limit)

    jz = z_operator(query.alpha, query.gamma, n)
    minimal = solve_tails(jz, z, n, [np.zeros(2)]).q
    free = solve_tails(jz, z, n, [np.array([1.0, 0.0]), np.array([0.0, 1.0])], start=np.zeros((1, 2))).q

    scale = np.max(np.abs(free[1]), axis=0)
    if not np.all(np.isfinite(scale)) or not np.any(scale > 0):
        raise ConditioningError(f"Degenerate tail response at n={n}")
    scale[scale == 0] = 1.0
    system = free[1] / scale

    mismatch = np.array([s1p, s1q]) - s0 * minimal[1][:, 0]
    weights, _, rank, sv = np.linalg.lstsq(system, mismatch, rcond=MILLER_RCOND)
    cond = sv[0] / sv[-1] if sv[-1] > 0 else np.inf
    values = [s0 * minimal[k][:, 0] + (free[k] / scale) @ weights for k in range(query.k_max + 1)]
    logger.debug("olver-miller n=%d matching condition %.3e rank %d", n, cond, rank)
    return StieltjesResult(z, values, "olver-miller", n, params=_params(query))


def _max_difference(a: StieltjesResult, b: StieltjesResult) -> float:
    return float(np.max(np.abs(a.flat() - b.flat())))


def stieltjes_auto(
    query: StieltjesQuery,
    threshold: float = AUTO_THRESHOLD,
    rtol: float = RTOL,
    n_cap: int = N_CAP,
) -> StieltjesResult:
    """Olver away from the contour, Olver-Miller near it"""
    dist = contour_distance(query.z)
    base = stieltjes_base(query.alpha, query.gamma, query.z, query.limit)

    if dist > threshold:
        result = olver_solve(query, rtol, n_cap, base=base[0])
        logger.info("auto: olver at z=%s (distance %.3g)", query.z, dist)
        return result

    n = max(2 * query.k_max, 16)
    result = olver_miller_solve(query, n, base)
    check = olver_miller_solve(query, 2 * n, base)
    result.est_error = _max_difference(result, check)
    logger.info("auto: olver-miller at z=%s (distance %.3g)", query.z, dist)
    return result


def solve_query(query: StieltjesQuery, config: Optional[dict] = None) -> StieltjesResult:
    """Dispatch on query.mode with tolerances from the stieltjes config section"""
    settings = (config or {}).get("stieltjes", {})
    rtol = settings.get("rtol", RTOL)
    n_cap = settings.get("n_cap", N_CAP)

    if query.mode == "forward":
        return forward_recurrence(query)
    if query.mode == "olver":
        return olver_solve(query, rtol, n_cap)
    if query.mode == "olver-miller":
        return olver_miller_solve(query)
    return stieltjes_auto(query, settings.get("auto_threshold", AUTO_THRESHOLD), rtol, n_cap)
