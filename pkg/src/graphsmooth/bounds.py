"""Inequalities tying b(G) to spectral, cut and degree parameters."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ._subsets import block_cut_sizes
from .graph import Graph, degree_stats, is_connected
from .l1 import DEFAULT_CAP, CapExceeded, b_exact, heuristic_b_upper
from .mincut import min_cut
from .spectral import DEFAULT_TOL, spectral

BRUTE_FORCE_CAP = 20


def _xi_pairs(G: Graph, cap: int) -> set[tuple[int, int]]:
    if G.n < 2:
        raise ValueError("need at least two vertices")
    if G.n > cap:
        raise CapExceeded(f"n={G.n} exceeds the brute-force cap {cap}")
    cuts, sizes = block_cut_sizes(G, 0, list(range(G.n)))
    return set(zip(cuts[1:-1].tolist(), sizes[1:-1].tolist()))


def xi_min(G: Graph, cap: int = BRUTE_FORCE_CAP) -> Fraction:
    """``min |delta(S)|/|S|`` over every nonempty proper S."""
    return min(Fraction(c, s) for c, s in _xi_pairs(G, cap))


def isoperimetric(G: Graph, cap: int = BRUTE_FORCE_CAP) -> Fraction:
    """Isoperimetric number: ``min |delta(S)|/|S|`` over ``1 <= |S| <= n // 2``."""
    return min(Fraction(c, s) for c, s in _xi_pairs(G, cap) if s <= G.n // 2)


@dataclass
class BoundRecord:
    name: str
    statement: str
    lhs: object
    rhs: object
    holds: bool
    slack: float
    status: str = "exact"  # exact | partial | inconclusive
    note: str = ""


@dataclass
class BoundsReport:
    n: int
    m: int
    a: float
    lambda_max: float
    b: Fraction | None
    b_upper: Fraction
    witness: frozenset[int]
    xi_min: Fraction | None
    i_G: Fraction | None
    mc: int
    mc_side: int
    d_min: int
    d_max: int
    records: list[BoundRecord] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        """Every decided record holds; inconclusive partial records are skipped."""
        return all(r.holds for r in self.records if r.status != "inconclusive")

    def record(self, name: str) -> BoundRecord:
        for r in self.records:
            if r.name == name:
                return r
        raise KeyError(name)


def _rec(name, statement, lhs, rhs, tol, status="exact", note="") -> BoundRecord:
    exact = isinstance(lhs, (int, Fraction)) and isinstance(rhs, (int, Fraction))
    holds = lhs <= rhs if exact else float(lhs) <= float(rhs) + tol
    if status == "partial" and not holds:
        # lhs is only an upper estimate of b, so failing proves nothing
        status = "inconclusive"
    return BoundRecord(name, statement, lhs, rhs, bool(holds), float(rhs) - float(lhs), status, note)


def bounds_report(
    G: Graph,
    cap: int = DEFAULT_CAP,
    tol: float = 1e-7,
    eig_tol: float = DEFAULT_TOL,
    workers: int = 1,
) -> BoundsReport:
    """Evaluate every bound on G.

    When ``n > cap`` the exact b is replaced by the min-cut upper bound; only
    upper-bound records are kept then, marked ``partial`` when they pass (which
    still proves the bound) and ``inconclusive`` when they do not.
    """
    if G.n < 2 or not is_connected(G):
        raise ValueError("bounds need a connected graph with n >= 2")
    n, m = G.n, G.m
    sp = spectral(G, eig_tol)
    a, lam = sp.a, sp.lambda_max
    d_min, d_max, _ = degree_stats(G)
    mc, mc_set = min_cut(G)
    s = len(mc_set)
    b_up, up_cut = heuristic_b_upper(G)

    exact = n <= cap
    if exact:
        res = b_exact(G, cap=cap, workers=workers)
        b, witness = res.b, res.sparsest
    else:
        b, witness = None, up_cut
    bval = b if exact else b_up
    status = "exact" if exact else "partial"

    xm = ig = None
    notes = []
    if n <= BRUTE_FORCE_CAP:
        xm, ig = xi_min(G), isoperimetric(G)
        notes.append("xi_min ranges over all nonempty proper S; i(G) only over |S| <= n//2")
    else:
        notes.append(f"xi_min and i(G) skipped: n > {BRUTE_FORCE_CAP}")
    if not exact:
        notes.append(f"n > cap {cap}: b replaced by the min-cut upper bound {b_up}")

    rep = BoundsReport(n, m, a, lam, b, b_up, witness.S, xm, ig, mc, s, d_min, d_max, notes=notes)
    R = rep.records
    rho_w = witness.rho
    R.append(_rec("mohar_lower", "a/n <= rho(S) at the witness cut", a / n, rho_w, tol))
    R.append(_rec("mohar_upper", "rho(S) <= lambda_max/n at the witness cut", rho_w, lam / n, tol))
    if m >= 2:
        rhs = 2 / n * math.sqrt(max(a * (2 * d_max - a), 0.0))
        min_rho = Fraction(2, n) * bval
        R.append(_rec("cheeger_upper", "min rho <= (2/n) sqrt(a (2 d_max - a))", min_rho, rhs, tol, status))
    else:
        rep.notes.append("cheeger_upper skipped: needs at least two edges")
    if exact:
        R.append(_rec("l2_lower", "a/2 <= b", a / 2, b, tol))
    R.append(_rec("l2_upper", "b <= lambda_max/2", bval, lam / 2, tol, status))
    if exact and xm is not None:
        R.append(_rec("xi_lower", "min xi(S) <= b", xm, b, tol))
    R.append(_rec("degree_upper", "b <= n d_min / (2(n-1))", bval, Fraction(n * d_min, 2 * (n - 1)), tol, status))
    R.append(
        _rec("mincut_upper", "b <= n mc / (2 s (n-s)) at the min-cut side size s", bval, Fraction(n * mc, 2 * s * (n - s)), tol, status)
    )
    R.append(_rec("sqrt_ma_upper", "b <= sqrt(m a)", bval, math.sqrt(m * a), tol, status))
    return rep


def mohar_holds_everywhere(G: Graph, a: float, lambda_max: float, tol: float = 1e-7) -> bool:
    """Check ``a/n <= rho(S) <= lambda_max/n`` for every nonempty proper S."""
    cuts, sizes = block_cut_sizes(G, 0, list(range(G.n)))
    cuts, sizes = cuts[1:-1], sizes[1:-1]
    rho = cuts / (sizes * (G.n - sizes))
    return bool(np.all(rho >= a / G.n - tol) and np.all(rho <= lambda_max / G.n + tol))


__all__ = [
    "BoundRecord",
    "BoundsReport",
    "bounds_report",
    "xi_min",
    "isoperimetric",
    "mohar_holds_everywhere",
]
