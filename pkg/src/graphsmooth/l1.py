"""l1 graph smoothing: the parameter b(G) and l1-Fiedler vectors.

The minimum of ``sum_{uv in E} |x_u - x_v|`` over ``sum x = 0, ||x||_1 = 1``
equals ``(n/2) * min rho(S)``, the minimum taken over cuts whose two sides both
induce connected subgraphs.  :func:`b_exact` enumerates those cuts; the
``*_oracle`` / ``*_unpruned`` functions are deliberately naive brute forces
used to cross-check it.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from ._subsets import block_cut_sizes, local_to_mask, reversed_bits
from .graph import Cut, Graph, _mask_connected, cut, from_mask, is_connected
from .mincut import min_cut
from .vectors import Regime, SmoothingVector

log = logging.getLogger(__name__)

DEFAULT_CAP = 26
ORACLE_CAP = 12
BLOCK_BITS = 18


class CapExceeded(ValueError):
    """The graph is too large for exhaustive enumeration."""


@dataclass(frozen=True)
class QuasiBipartition:
    S1: frozenset[int]
    S2: frozenset[int]

    def __post_init__(self):
        if not self.S1 or not self.S2:
            raise ValueError("both parts of a quasi-bipartition must be nonempty")
        if self.S1 & self.S2:
            raise ValueError("parts of a quasi-bipartition must be disjoint")


@dataclass(frozen=True, eq=False)
class L1Result:
    b: Fraction
    sparsest: Cut
    vector: SmoothingVector
    enumerated: int
    connectivity_checks: int


def f1(G: Graph, x: Sequence) -> object:
    """Sum of absolute differences along edges; exact when ``x`` holds Fractions."""
    if len(x) != G.n:
        raise ValueError(f"vector has length {len(x)}, graph has {G.n} vertices")
    return sum(abs(x[u] - x[v]) for u, v in G.edges)


def is_feasible_l1(x: Sequence, tol: float = 1e-9) -> bool:
    """Check ``sum x = 0`` and ``||x||_1 = 1``.

    The positive-part / negative-part form (positive entries sum to 1/2,
    negative entries to -1/2) is evaluated too and a disagreement is logged.
    """
    total = sum(x)
    l1 = sum(abs(v) for v in x)
    direct = abs(total) <= tol and abs(l1 - 1) <= tol
    pos = sum(v for v in x if v >= 0)
    neg = sum(v for v in x if v <= 0)
    split = abs(pos - Fraction(1, 2)) <= tol and abs(neg + Fraction(1, 2)) <= tol
    if direct != split:
        log.warning("l1 feasibility checks disagree (sum=%s, l1=%s, pos=%s, neg=%s)", total, l1, pos, neg)
    return direct


def l1_fiedler_from_cut(G: Graph, S: Iterable[int] | int) -> SmoothingVector:
    """Two-valued vector: ``1/(2|S|)`` on S and ``-1/(2|V\\S|)`` elsewhere."""
    c = cut(G, S)
    s = len(c.S)
    hi, lo = Fraction(1, 2 * s), Fraction(-1, 2 * (G.n - s))
    values = tuple(hi if v in c.S else lo for v in range(G.n))
    return SmoothingVector(values, Regime.L1, f1(G, values))


def quasi_bipartition_vector(G: Graph, qb: QuasiBipartition) -> SmoothingVector:
    """Vector with ``1/(2|S1|)`` on S1, ``-1/(2|S2|)`` on S2 and 0 elsewhere."""
    if max(qb.S1 | qb.S2) >= G.n:
        raise ValueError("quasi-bipartition exceeds the graph's vertex range")
    hi, lo = Fraction(1, 2 * len(qb.S1)), Fraction(-1, 2 * len(qb.S2))
    values = tuple(hi if v in qb.S1 else lo if v in qb.S2 else Fraction(0) for v in range(G.n))
    return SmoothingVector(values, Regime.L1, f1(G, values))


def _require_connected(G: Graph) -> None:
    if G.n < 2:
        raise ValueError("need at least two vertices")
    if not is_connected(G):
        raise ValueError("graph is not connected")


def _canon_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return mask.bit_count(), tuple(sorted(from_mask(mask)))


def _block_keys(G: Graph, base: int, vary: list[int]):
    cuts, sizes = block_cut_sizes(G, base, vary)
    denom = sizes * (G.n - sizes)
    key = np.full(cuts.shape, np.inf)
    ok = denom > 0
    key[ok] = cuts[ok] / denom[ok]
    return cuts, sizes, denom, key


def _first_connected_at(G: Graph, base: int, vary: list[int], level: float, data):
    """Canonically first set of the block with density ``level`` whose two
    sides are connected, as ``((rho, key, mask), checks)``."""
    cuts, sizes, denom, key = data
    idx = np.flatnonzero(key == level)
    if idx.size == 0:
        return None, 0
    full = (1 << G.n) - 1
    checks = 0
    cand_sizes = sizes[idx]
    # smallest size first; within a size, larger reversed bits = lexicographically smaller
    for s in np.unique(cand_sizes):
        group = idx[cand_sizes == s]
        for t in group[np.argsort(-reversed_bits(group, len(vary)), kind="stable")]:
            mask = local_to_mask(base, vary, t)
            checks += 1
            if _mask_connected(mask, G.adj_masks) and _mask_connected(full ^ mask, G.adj_masks):
                return (Fraction(int(cuts[t]), int(denom[t])), _canon_key(mask), mask), checks
    return None, checks


def b_exact(G: Graph, cap: int = DEFAULT_CAP, workers: int = 1, block_bits: int = BLOCK_BITS) -> L1Result:
    """Exact b(G) and a canonical sparsest cut by exhaustive enumeration.

    Only sets containing vertex 0 are scored (a cut and its complement are the
    same cut), in blocks of ``2**block_bits``.  Density levels are visited in
    increasing order; at each level the blocks report their canonically first
    candidate whose two sides both induce connected subgraphs, and the search
    stops at the first level that has one.  The witness is the smallest such
    set, ties broken by the lexicographically smallest sorted vertex list, so
    the result does not depend on ``workers``.
    """
    _require_connected(G)
    if G.n > cap:
        raise CapExceeded(f"n={G.n} exceeds the exact enumeration cap {cap}")
    free = list(range(1, G.n))
    vary, high = free[:block_bits], free[block_bits:]
    bases = [local_to_mask(1, high, h) for h in range(1 << len(high))]
    cache = len(bases) <= 16

    def data(i):
        if cache:
            if i not in store:
                store[i] = _block_keys(G, bases[i], vary)
            return store[i]
        return _block_keys(G, bases[i], vary)

    store: dict = {}
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    run = pool.map if pool else map
    try:
        block_min = list(run(lambda i: float(data(i)[3].min()), range(len(bases))))
        level = min(block_min)
        checks = 0
        found = []
        while np.isfinite(level) and not found:
            todo = [i for i in range(len(bases)) if block_min[i] <= level]
            for item, c in run(lambda i: _first_connected_at(G, bases[i], vary, level, data(i)), todo):
                checks += c
                if item is not None:
                    found.append(item)
            if not found:
                # only reached if no minimum-density set splits G into connected parts
                nxt = [float(k[k > level].min(initial=np.inf)) for k in (data(i)[3] for i in todo)]
                level = min(nxt + [b for b in block_min if b > level])
    finally:
        if pool:
            pool.shutdown()
    if not found:
        raise RuntimeError("no cut with both sides connected was found")

    rho, _, mask = min(found, key=lambda item: item[:2])
    witness = cut(G, mask)
    vector = l1_fiedler_from_cut(G, mask)
    b = Fraction(G.n, 2) * rho
    assert witness.rho == rho and vector.objective == b
    return L1Result(
        b=b,
        sparsest=witness,
        vector=vector,
        enumerated=(1 << (G.n - 1)) - 1,
        connectivity_checks=checks,
    )


def _all_cut_sizes(G: Graph) -> np.ndarray:
    # straightforward per-edge evaluation, kept independent of block_cut_sizes
    t = np.arange(1 << G.n, dtype=np.int64)
    out = np.zeros(t.shape, dtype=np.int64)
    for u, v in G.edges:
        out += ((t >> u) & 1) != ((t >> v) & 1)
    return out


def min_density_unpruned(G: Graph, cap: int = ORACLE_CAP) -> Fraction:
    """``min rho(S)`` over every nonempty proper S, no connectivity filter."""
    if G.n < 2:
        raise ValueError("need at least two vertices")
    if G.n > cap:
        raise CapExceeded(f"n={G.n} exceeds the oracle cap {cap}")
    cuts = _all_cut_sizes(G)[1:-1]
    sizes = np.bitwise_count(np.arange(1, (1 << G.n) - 1)).astype(np.int64)
    pairs = set(zip(cuts.tolist(), sizes.tolist()))
    return min(Fraction(c, s * (G.n - s)) for c, s in pairs)


def b_quasi_oracle(G: Graph, cap: int = ORACLE_CAP) -> Fraction:
    """Brute-force ``(1/2) min (xi(S1) + xi(S2))`` over all quasi-bipartitions.

    Every ordered pair of disjoint nonempty sets is scored; nothing is assumed
    about connectivity or about the pair covering V.
    """
    _require_connected(G)
    if G.n > cap:
        raise CapExceeded(f"n={G.n} exceeds the oracle cap {cap}")
    scale = math.lcm(*range(1, G.n + 1))
    masks = np.arange(1 << G.n, dtype=np.int64)
    sizes = np.bitwise_count(masks).astype(np.int64)
    cuts = _all_cut_sizes(G)
    xi_scaled = np.full(masks.shape, np.iinfo(np.int64).max // 4, dtype=np.int64)
    xi_scaled[1:] = cuts[1:] * (scale // sizes[1:])
    best = None
    for A in range(1, (1 << G.n) - 1):
        disjoint = (masks & A) == 0
        disjoint[0] = False
        val = int(xi_scaled[A] + xi_scaled[disjoint].min())
        if best is None or val < best:
            best = val
    return Fraction(best, 2 * scale)


def heuristic_b_upper(G: Graph) -> tuple[Fraction, Cut]:
    """Upper bound on b(G) from a global minimum cut: ``(n/2) rho(S_mc)``."""
    _, witness = min_cut(G)
    c = cut(G, witness)
    return Fraction(G.n, 2) * c.rho, c


__all__ = [
    "DEFAULT_CAP",
    "ORACLE_CAP",
    "CapExceeded",
    "QuasiBipartition",
    "L1Result",
    "f1",
    "is_feasible_l1",
    "l1_fiedler_from_cut",
    "quasi_bipartition_vector",
    "b_exact",
    "b_quasi_oracle",
    "min_density_unpruned",
    "heuristic_b_upper",
]
