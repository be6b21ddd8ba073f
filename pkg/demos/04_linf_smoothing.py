"""
l-infinity smoothing by linear programming
==========================================

Minimising the largest edge difference with zero sum and unit max norm is
solved by one LP per vertex, pinning that vertex to 1.  On a path the answer
is an arithmetic progression from 1 down to -1.
"""

from graphsmooth import families, gamma, gamma_path_closed_form

for n in (2, 5, 6, 10):
    res = gamma(families.path(n))
    g, x = gamma_path_closed_form(n)
    print(f"P{n}: LP gamma {res.gamma:.6f}, closed form {g} ; progression {[str(v) for v in x]}")

res = gamma(families.star(6))
print("star S6: gamma", round(res.gamma, 6), "pinned vertex", res.argmin_k)
print("vector", res.x.as_array().round(4))
