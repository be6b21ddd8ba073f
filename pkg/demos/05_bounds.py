"""
Spectral, degree and cut bounds on b(G)
=======================================

b(G) sits between half the algebraic connectivity and half the largest
Laplacian eigenvalue, and below several cut and degree quantities.  The
report lists each inequality with its slack.
"""

from graphsmooth import bounds_report, families

for name, G in [("K6", families.complete(6)), ("star S7", families.star(7)), ("C10", families.cycle(10))]:
    rep = bounds_report(G)
    print(f"{name}: b = {rep.b}, a = {rep.a:.4f}, lambda_max = {rep.lambda_max:.4f}")
    for r in rep.records:
        print(f"   {r.name:14s} holds={r.holds!s:5s} slack={r.slack:.4f}  {r.statement}")

# on complete graphs the lower bound a/2 <= b is an equality
print("K6 tight:", bounds_report(families.complete(6)).record("l2_lower").slack)
