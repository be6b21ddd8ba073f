"""l-infinity graph smoothing: minimise the largest edge difference subject to
``sum x = 0`` and ``max |x| = 1``, via one LP per pinned vertex."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import Graph, is_connected
from .lp import LinearProgram, LPError, solve_lp
from .vectors import Regime, SmoothingVector


@dataclass(frozen=True, eq=False)
class LinfResult:
    gamma: float
    x: SmoothingVector
    argmin_k: int
    values: tuple[float, ...]  # LP(k) optimum for every k


def build_lp_k(G: Graph, k: int) -> LinearProgram:
    """LP(k) over ``(x_0..x_{n-1}, y)``: minimise y with x_k pinned to 1.

    Per edge ``x_i - x_j <= y`` and ``x_j - x_i <= y``; ``sum x = 0``;
    ``-1 <= x <= 1``; y is free.
    """
    n = G.n
    if not 0 <= k < n:
        raise ValueError(f"pinned vertex {k} out of range 0..{n - 1}")
    c = np.zeros(n + 1)
    c[n] = 1.0
    A_ub = np.zeros((2 * G.m, n + 1))
    for r, (i, j) in enumerate(G.edges):
        A_ub[2 * r, [i, j, n]] = [1.0, -1.0, -1.0]
        A_ub[2 * r + 1, [i, j, n]] = [-1.0, 1.0, -1.0]
    A_eq = np.zeros((1, n + 1))
    A_eq[0, :n] = 1.0
    lower = np.concatenate([-np.ones(n), [-np.inf]])
    upper = np.concatenate([np.ones(n), [np.inf]])
    lower[k] = 1.0
    return LinearProgram.build(c, A_ub, np.zeros(2 * G.m), A_eq, [0.0], lower, upper)


def max_edge_difference(G: Graph, x) -> object:
    return max(abs(x[u] - x[v]) for u, v in G.edges)


def gamma(G: Graph, tol: float = 1e-9, workers: int = 1) -> LinfResult:
    """Solve LP(k) for every vertex k and keep the smallest optimum (smallest k on ties)."""
    if G.n < 2 or not is_connected(G):
        raise ValueError("gamma requires a connected graph with n >= 2")

    def solve(k):
        sol = solve_lp(build_lp_k(G, k), tol=tol)
        if not sol.ok:
            raise LPError(sol.status, f"LP({k}) failed: {sol.status}")
        return sol

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            sols = list(pool.map(solve, range(G.n)))
    else:
        sols = [solve(k) for k in range(G.n)]
    values = tuple(s.objective_value for s in sols)
    best = values[0]
    k_best = 0
    for k, v in enumerate(values):
        if v < best - 1e-9:
            best, k_best = v, k
    x = sols[k_best].z[: G.n].copy()
    return LinfResult(
        gamma=float(best),
        x=SmoothingVector(x, Regime.LINF, float(max_edge_difference(G, x))),
        argmin_k=k_best,
        values=values,
    )


def gamma_path_closed_form(n: int) -> tuple[Fraction, tuple[Fraction, ...]]:
    """gamma(P_n) = 2/(n-1) with the arithmetic progression from 1 down to -1."""
    if n < 2:
        raise ValueError("path needs n >= 2")
    g = Fraction(2, n - 1)
    return g, tuple(1 - i * g for i in range(n))
