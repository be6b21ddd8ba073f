"""Global minimum edge cut (Stoer-Wagner)."""

from __future__ import annotations

import numpy as np

from .graph import Graph, is_connected


def min_cut(G: Graph) -> tuple[int, frozenset[int]]:
    """Return ``(mc, S)`` with ``|delta(S)| = mc`` minimal over nonempty proper S.

    Each phase grows a maximum-adjacency ordering (ties to the smallest
    index), records the cut-of-the-phase around the last vertex and merges
    the last two vertices.
    """
    n = G.n
    if n < 2:
        raise ValueError("minimum cut needs at least two vertices")
    if not is_connected(G):
        raise ValueError("graph is not connected")
    W = np.zeros((n, n), dtype=np.int64)
    for u, v in G.edges:
        W[u, v] = W[v, u] = 1
    groups = {v: [v] for v in range(n)}
    active = list(range(n))
    best_value = None
    best_side: list[int] = []

    while len(active) > 1:
        weight = {v: 0 for v in active}
        remaining = list(active)
        order = []
        while remaining:
            nxt = max(remaining, key=lambda v: (weight[v], -v))
            remaining.remove(nxt)
            order.append(nxt)
            for v in remaining:
                weight[v] += int(W[nxt, v])
        s, t = order[-2], order[-1]
        phase_cut = weight[t]
        if best_value is None or phase_cut < best_value:
            best_value = phase_cut
            best_side = list(groups[t])
        W[s, :] += W[t, :]
        W[:, s] += W[:, t]
        W[s, s] = 0
        W[t, :] = 0
        W[:, t] = 0
        groups[s].extend(groups.pop(t))
        active.remove(t)

    return int(best_value), frozenset(best_side)
