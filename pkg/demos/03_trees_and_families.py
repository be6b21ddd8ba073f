"""
Trees, center edges and closed forms
====================================

On a tree the sparsest cut removes a single edge, and the best edge is one
that splits the vertices most evenly.  Named families have closed forms that
the exact enumeration confirms.
"""

import numpy as np

from graphsmooth import b_exact, b_tree, center_edges, closed_form_b, families, substar_check
from graphsmooth.families import FamilySpec, generate

T = families.broom(4, 9)
r = center_edges(T)
print("broom B(4,5): center edges", r.center_edges, "imbalance", r.delta, "b =", r.b)

rng = np.random.default_rng(0)
for _ in range(3):
    T = families.random_tree(14, rng)
    r = center_edges(T)
    print(f"random tree: {len(r.center_edges)} center edge(s), substar={substar_check(T, r.center_edges)}, "
          f"b_tree={b_tree(T)} b_exact={b_exact(T).b}")

for spec in [FamilySpec("cycle", 7), FamilySpec("star", 6), FamilySpec("starlike", parts=(3, 3, 3))]:
    print(f"{spec.family:9s} n={spec.n:2d}  closed form {closed_form_b(spec)}  enumeration {b_exact(generate(spec)).b}")

# wheels: an arc of two rim vertices gives n/(n-2), but only up to n = 8
for n in (8, 9, 12):
    print(f"W{n}: n/(n-2) = {n}/{n - 2}, exact b = {b_exact(families.wheel(n)).b}")
