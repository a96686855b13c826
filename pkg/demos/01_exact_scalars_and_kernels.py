#!/usr/bin/env python3
"""Tour of the exact scalar layer.

Everything in this package is computed over Gaussian rationals: complex
numbers whose real and imaginary parts are exact fractions.  This demo
shows the literal grammar, the q-Pochhammer kernels, and why a context
object guards the base q.
"""

from fractions import Fraction

from qconnect import (
    GaussScalar,
    InvalidContext,
    QContext,
    parse_scalar,
    qbinomial,
    qpochhammer,
    qpochhammer_negpow,
    rising_factorial,
    scalar,
)

print("== scalars ==")
z = parse_scalar("-1/3+2/7i")
print(f"parsed {z.literal()!r}: re={z.re}, im={z.im}")
circle = GaussScalar(Fraction(3, 5), Fraction(4, 5))
print(f"{circle.literal()} lies on the unit circle: z * conj(z) =",
      (circle * circle.conjugate()).literal())
print("inverse of a circle point is its conjugate:",
      (1 / circle).literal(), "==", circle.conjugate().literal())

print()
print("== q-Pochhammer kernels ==")
q = scalar("2/5")
print("(1/2; 1/3)_2 =", qpochhammer("1/2", "1/3", 2).literal(), "(exactly 5/12)")
print("(q^-2; q)_3 at q=2/5 vanishes:", qpochhammer(q**-2, q, 3).literal())
print("(3)_4 =", rising_factorial(3, 4).literal())

ctx = QContext(q, max_degree=8)
print("(q;q)_k cache:", [v.literal() for v in ctx.qq_cache[:4]], "...")
print("q-binomial [5,2]_q =", qbinomial(5, 2, ctx).literal())

print()
print("== the closed form for (q^-n;q)_m ==")
for n, m in ((4, 2), (5, 5), (3, 4)):
    closed = qpochhammer_negpow(n, m, ctx)
    direct = qpochhammer(q**-n, q, m)
    print(f"n={n} m={m}: closed {closed.literal():>18}  direct {direct.literal():>18}  "
          f"equal={closed == direct}")

print()
print("== the context rejects unusable q ==")
for bad in (0, 1, -1):
    try:
        QContext(bad, 4)
    except InvalidContext as exc:
        print(f"q={bad}: {exc}")
