#!/usr/bin/env python3
"""Connection coefficients between family instances.

C_m(n) expands source P_n in target polynomials Q_m.  Same-family pairs
with a shared basis have one-step closed forms; anything else routes
through the composition rule: expand the source over a basis, then invert
the basis into the target, and contract the two triangular tables.
"""

from qconnect import (
    PreconditionViolated,
    QContext,
    closed_form_connection,
    closed_form_inversion,
    compose,
    definition_coefficients,
    make_instance,
    oracle_connection,
)

ctx = QContext("2/5", 8)

print("== same-family pair with the shared-parameter rule ==")
src = make_instance("askey-wilson", {"a": "1/3", "b": "1/5", "c": "2/7", "d": "3/4"}, ctx)
tgt = make_instance("askey-wilson", {"a": "1/3", "b": "2/9", "c": "1/6", "d": "2/5"}, ctx)
for n in range(4):
    cv = closed_form_connection(src, tgt, n)
    assert tuple(cv.values) == tuple(oracle_connection(src, tgt, n).values)
    print(f"  C(n={n}):", [v.literal() for v in cv])

print()
print("connecting an instance to itself gives the Kronecker delta:")
print("  ", [v.literal() for v in closed_form_connection(src, src, 4)])

print()
print("== a guarded pair: the paired basis must match ==")
r1 = make_instance("q-racah", {"alpha": "1/3", "beta": "2/7", "gamma": "1/5", "delta": "3/4"}, ctx)
bad = make_instance("q-racah", {"alpha": "1/6", "beta": "3/8", "gamma": "1/4", "delta": "3/4"}, ctx)
try:
    closed_form_connection(r1, bad, 2)
except PreconditionViolated as exc:
    print("  rejected:", exc)
good = make_instance("q-racah", {"alpha": "1/6", "beta": "3/8", "gamma": "1/4", "delta": "3/5"}, ctx)
print("  gamma*delta matched:", [v.literal() for v in closed_form_connection(r1, good, 2)])

print()
print("== cross-family route through composition ==")
jacobi = make_instance("little-q-jacobi", {"a": "1/3", "b": "1/5"}, ctx)
wall = make_instance("little-q-laguerre", {"a": "1/2"}, ctx)
n_max = 4
d_rows = [definition_coefficients(jacobi, n) for n in range(n_max + 1)]
i_rows = [closed_form_inversion(wall, k) for k in range(n_max + 1)]
combined = compose(d_rows, i_rows)
for n in range(n_max + 1):
    direct = oracle_connection(jacobi, wall, n)
    assert tuple(combined[n].values) == tuple(direct.values)
print(f"  compose(definition, inversion) == oracle for n <= {n_max} (exact)")
print("  sample row n=3:", [v.literal() for v in combined[3]])
