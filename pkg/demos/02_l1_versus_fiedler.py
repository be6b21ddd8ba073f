"""
Sparsest cut versus spectral bisection
======================================

Points in the unit square are joined when closer than a radius.  The sign
pattern of the Fiedler vector gives one partition; the exact sparsest cut
gives another, never denser.
"""

from graphsmooth import b_exact, cut, families, induced_connected, spectral

geo = families.random_geometric_graph(15, 0.45, seed=2)
G = geo.graph
print(f"n={G.n} m={G.m} (seed {geo.seed}, {geo.attempts} attempt(s))")

sp = spectral(G)
l2 = cut(G, sp.bisection)
l1 = b_exact(G).sparsest

for name, c in (("fiedler", l2), ("sparsest", l1)):
    print(
        f"{name:9s} sides {len(c.S)}|{G.n - len(c.S)}  cut {c.boundary_size}  "
        f"density {c.rho} ~ {float(c.rho):.4f}"
    )

print("sparsest cut sides connected:", induced_connected(G, l1.S), induced_connected(G, l1.complement))

# the same comparison from the shell:
#   graphsmooth gen --rgg --n 15 --radius 0.45 --seed 2 | graphsmooth compare
#   graphsmooth gen --rgg --n 15 --radius 0.45 --seed 2 | graphsmooth partition --method l1 > l1.dot
