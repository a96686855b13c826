#!/usr/bin/env python3
"""Watching the q-world collapse onto the classical one.

With parameters bound as integer powers of q and q pushed toward 1, the
exact q-connection coefficients converge to the classical rising-factorial
ones at first order in 1-q.  The computation stays exact at every fixed q;
only the final comparison uses floating point.
"""

from fractions import Fraction

from qconnect import QContext, connect_basic, connect_classical, scalar

alpha, beta, gamma, delta = 2, 3, 4, 2
n = 4
classical = connect_classical(None, [alpha], [beta], [gamma], [delta], n)
print(f"classical target row C(n={n}):", [v.literal() for v in classical])
print()
print(f"{'1-q':>10} | componentwise |defect| against the classical row")
rows = {}
for eps in (Fraction(1, 10), Fraction(1, 100), Fraction(1, 1000), Fraction(1, 10000)):
    q = scalar(Fraction(1) - eps)
    ctx = QContext(q, n + 2)
    got = connect_basic(0, [q**alpha], [q**beta], 0, [q**gamma], [q**delta], n, ctx)
    defects = [abs(float(got[m]) - float(classical[m])) for m in range(n + 1)]
    rows[eps] = defects
    print(f"{str(eps):>10} | " + "  ".join(f"{d:.3e}" for d in defects))

print()
print("defect ratio between 1-q = 1e-3 and 1e-4 (should sit near 10):")
for m in range(n + 1):
    if float(classical[m]):
        print(f"  m={m}: {rows[Fraction(1, 1000)][m] / rows[Fraction(1, 10000)][m]:.2f}")
