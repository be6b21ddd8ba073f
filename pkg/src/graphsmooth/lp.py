"""Small dense linear programs: two-phase primal simplex with Bland's rule.

Problem form::

    minimize    c @ z
    subject to  A_ub @ z <= b_ub
                A_eq @ z == b_eq
                lower <= z <= upper      (bounds may be infinite)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"
NUMERICAL_FAILURE = "numerical_failure"


class LPError(RuntimeError):
    def __init__(self, status: str, message: str = ""):
        self.status = status
        super().__init__(message or status)


@dataclass(frozen=True, eq=False)
class LinearProgram:
    c: np.ndarray
    A_ub: np.ndarray
    b_ub: np.ndarray
    A_eq: np.ndarray
    b_eq: np.ndarray
    lower: np.ndarray
    upper: np.ndarray

    @classmethod
    def build(cls, c, A_ub=None, b_ub=None, A_eq=None, b_eq=None, lower=None, upper=None) -> "LinearProgram":
        """Normalise inputs; omitted bounds default to ``z >= 0``."""
        c = np.asarray(c, dtype=float).ravel()
        n = c.size

        def rows(A, b, name):
            if A is None:
                if b is not None and len(b):
                    raise ValueError(f"{name}: rhs given without matrix")
                return np.zeros((0, n)), np.zeros(0)
            A = np.atleast_2d(np.asarray(A, dtype=float))
            b = np.asarray(b, dtype=float).ravel()
            if A.shape[1] != n or A.shape[0] != b.size:
                raise ValueError(f"{name}: shape {A.shape} does not match rhs {b.size} / {n} variables")
            return A, b

        A_ub, b_ub = rows(A_ub, b_ub, "A_ub")
        A_eq, b_eq = rows(A_eq, b_eq, "A_eq")
        lo = np.zeros(n) if lower is None else np.broadcast_to(np.asarray(lower, dtype=float), (n,)).copy()
        hi = np.full(n, np.inf) if upper is None else np.broadcast_to(np.asarray(upper, dtype=float), (n,)).copy()
        for arr in (c, A_ub, b_ub, A_eq, b_eq):
            if not np.all(np.isfinite(arr)):
                raise ValueError("coefficients must be finite")
        if np.any(np.isnan(lo)) or np.any(np.isnan(hi)) or np.any(lo == np.inf) or np.any(hi == -np.inf):
            raise ValueError("invalid bounds")
        return cls(c, A_ub, b_ub, A_eq, b_eq, lo, hi)

    @property
    def num_vars(self) -> int:
        return self.c.size

    def violation(self, z: np.ndarray) -> float:
        """Largest constraint violation at ``z`` (0 when feasible)."""
        v = [0.0]
        if self.A_ub.size:
            v.append(float(np.max(self.A_ub @ z - self.b_ub)))
        if self.A_eq.size:
            v.append(float(np.max(np.abs(self.A_eq @ z - self.b_eq))))
        v.append(float(np.max(self.lower - z, initial=0.0)))
        v.append(float(np.max(z - self.upper, initial=0.0)))
        return max(v)


@dataclass(frozen=True, eq=False)
class LPSolution:
    status: str
    z: np.ndarray | None
    objective_value: float | None
    iterations: int = 0

    @property
    def ok(self) -> bool:
        return self.status == OPTIMAL


def _to_standard(lp: LinearProgram):
    """Map ``z = offset + T @ w`` with ``w >= 0``; returns equality-form data."""
    n = lp.num_vars
    cols = []
    offset = np.zeros(n)
    extra_ub = []
    for j in range(n):
        lo, hi = lp.lower[j], lp.upper[j]
        if np.isfinite(lo):
            offset[j] = lo
            cols.append((j, 1.0))
            if np.isfinite(hi):
                extra_ub.append((len(cols) - 1, hi - lo))
        elif np.isfinite(hi):
            offset[j] = hi
            cols.append((j, -1.0))
        else:
            cols.append((j, 1.0))
            cols.append((j, -1.0))
    T = np.zeros((n, len(cols)))
    for k, (j, s) in enumerate(cols):
        T[j, k] = s

    A_ub = lp.A_ub @ T
    b_ub = lp.b_ub - lp.A_ub @ offset
    if extra_ub:
        rows = np.zeros((len(extra_ub), len(cols)))
        for r, (k, cap) in enumerate(extra_ub):
            rows[r, k] = 1.0
        A_ub = np.vstack([A_ub, rows])
        b_ub = np.concatenate([b_ub, [cap for _, cap in extra_ub]])
    A_eq = lp.A_eq @ T
    b_eq = lp.b_eq - lp.A_eq @ offset

    n_ub = A_ub.shape[0]
    A = np.vstack([np.hstack([A_ub, np.eye(n_ub)]), np.hstack([A_eq, np.zeros((A_eq.shape[0], n_ub))])])
    b = np.concatenate([b_ub, b_eq])
    cost = np.concatenate([lp.c @ T, np.zeros(n_ub)])
    return A, b, cost, T, offset


class _Tableau:
    def __init__(self, A: np.ndarray, b: np.ndarray, basis: list[int], tol: float, max_iter: int):
        self.M = np.hstack([A, b[:, None]])
        self.basis = basis
        self.tol = tol
        self.max_iter = max_iter
        self.iterations = 0

    def pivot(self, r: int, k: int) -> None:
        M = self.M
        M[r] /= M[r, k]
        col = M[:, k].copy()
        col[r] = 0.0
        M -= np.outer(col, M[r])
        self.basis[r] = k

    def run(self, cost: np.ndarray, allowed: np.ndarray) -> str:
        """Minimise ``cost @ w``; columns outside ``allowed`` never enter."""
        tol = self.tol
        while True:
            if self.iterations >= self.max_iter:
                return NUMERICAL_FAILURE
            body = self.M[:, :-1]
            reduced = cost - cost[self.basis] @ body
            candidates = np.flatnonzero((reduced < -tol) & allowed)
            if candidates.size == 0:
                return OPTIMAL
            k = int(candidates[0])  # Bland: lowest index enters
            col = body[:, k]
            rows = np.flatnonzero(col > tol)
            if rows.size == 0:
                return UNBOUNDED
            ratios = self.M[rows, -1] / col[rows]
            best = ratios.min()
            ties = rows[ratios <= best + tol * max(1.0, abs(best))]
            r = int(min(ties, key=lambda i: self.basis[i]))  # Bland: lowest basic index leaves
            if abs(self.M[r, k]) <= tol:
                return NUMERICAL_FAILURE
            self.pivot(r, k)
            self.iterations += 1


def solve_lp(lp: LinearProgram, tol: float = 1e-9, max_iter: int = 10_000) -> LPSolution:
    A, b, cost, T, offset = _to_standard(lp)
    m, N = A.shape
    neg = b < 0
    A[neg] *= -1
    b[neg] *= -1

    # phase 1 with one artificial per row
    A1 = np.hstack([A, np.eye(m)])
    tab = _Tableau(A1, b.astype(float), list(range(N, N + m)), tol, max_iter)
    cost1 = np.concatenate([np.zeros(N), np.ones(m)])
    status = tab.run(cost1, np.ones(N + m, dtype=bool))
    if status != OPTIMAL:
        return LPSolution(NUMERICAL_FAILURE, None, None, tab.iterations)
    scale = max(1.0, float(np.abs(b).max(initial=0.0)))
    if tab.M[:, -1] @ cost1[tab.basis] > 1e3 * tol * scale:
        return LPSolution(INFEASIBLE, None, None, tab.iterations)

    # drive remaining artificials out of the basis, dropping redundant rows
    r = 0
    while r < len(tab.basis):
        if tab.basis[r] >= N:
            row = tab.M[r, :N]
            ks = np.flatnonzero(np.abs(row) > tol)
            if ks.size:
                tab.pivot(r, int(ks[0]))
            else:
                tab.M = np.delete(tab.M, r, axis=0)
                del tab.basis[r]
                continue
        r += 1

    tab.M = np.hstack([tab.M[:, :N], tab.M[:, -1:]])
    status = tab.run(cost, np.ones(N, dtype=bool))
    if status != OPTIMAL:
        return LPSolution(status, None, None, tab.iterations)

    w = np.zeros(N)
    w[tab.basis] = tab.M[:, -1]
    z = offset + T @ w[: T.shape[1]]
    if lp.violation(z) > 1e-6 * max(1.0, scale):
        return LPSolution(NUMERICAL_FAILURE, z, None, tab.iterations)
    return LPSolution(OPTIMAL, z, float(lp.c @ z), tab.iterations)
