"""
Exact l1 smoothing through sparsest cuts
========================================

The smallest value of sum |x_u - x_v| over vectors with zero sum and unit
l1 norm equals (n/2) times the smallest edge density of a cut whose two
sides are both connected.  Enumerating those cuts gives b(G) as an exact
fraction.
"""

from graphsmooth import b_exact, b_quasi_oracle, f1, families, is_feasible_l1

# the path on five vertices
P5 = families.path(5)
res = b_exact(P5)
print("b(P5) =", res.b)
print("sparsest side:", sorted(res.sparsest.S), "density", res.sparsest.rho)

# the optimal vector takes one value per side
x = res.vector.values
print("vector:", [str(v) for v in x])
print("feasible:", is_feasible_l1(x, tol=0), " f1 =", f1(P5, x))

# a brute-force search over pairs of disjoint sets lands on the same number
print("quasi-bipartition search:", b_quasi_oracle(P5))

# the cube: every balanced face cut has density 1/4
cube = families.cube()
print("b(cube) =", b_exact(cube).b, "witness", sorted(b_exact(cube).sparsest.S))
