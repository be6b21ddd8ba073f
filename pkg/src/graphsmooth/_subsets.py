"""Vectorised cut sizes over blocks of vertex subsets.

A block is described by a fixed ``base`` mask plus a list of ``vary``
vertices; local index ``t`` (an integer below ``2**len(vary)``) selects the
subset ``base | {vary[j] : bit j of t}``.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .graph import Graph, boundary_size


def block_cut_sizes(G: Graph, base: int, vary: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(boundary sizes, set sizes)`` for every subset in the block."""
    k = len(vary)
    if any(base >> v & 1 for v in vary):
        raise ValueError("vary vertices must lie outside the base set")
    size = 1 << k
    t = np.arange(size, dtype=np.int64)
    cuts = np.empty(size, dtype=np.int64)
    cuts[0] = boundary_size(G, base)
    degs = G.degrees
    for j, v in enumerate(vary):
        local_adj = 0
        for jj in range(j):
            if G.adj_masks[v] >> vary[jj] & 1:
                local_adj |= 1 << jj
        nb_base = (G.adj_masks[v] & base).bit_count()
        lo = 1 << j
        inside = np.bitwise_count(t[:lo] & local_adj).astype(np.int64)
        # adding v flips each incident edge between cut and non-cut
        cuts[lo : 2 * lo] = cuts[:lo] + degs[v] - 2 * (nb_base + inside)
    sizes = np.bitwise_count(t).astype(np.int64) + base.bit_count()
    return cuts, sizes


def local_to_mask(base: int, vary: Sequence[int], t: int) -> int:
    mask = base
    j = 0
    t = int(t)
    while t:
        if t & 1:
            mask |= 1 << vary[j]
        t >>= 1
        j += 1
    return mask


def reversed_bits(t: np.ndarray, k: int) -> np.ndarray:
    out = np.zeros_like(t)
    for j in range(k):
        out |= ((t >> j) & 1) << (k - 1 - j)
    return out
