"""Independent ground-truth computations.

Everything here works from first principles: expand polynomials in the
monomial basis and solve the lower-triangular system by back-substitution
in exact arithmetic, run the general inversion recursion, or compare two
evaluation procedures pointwise at exact points.  Nothing in this module
calls a closed-form coefficient engine; that separation is what makes the
outputs usable as evidence against the shipped formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import DegenerateLeadingCoefficient, NonMonicInput, VariableMismatch
from .families import FamilyInstance, variables_compatible
from .poly import Polynomial, to_monomial
from .scalar import GaussScalar, ONE, ZERO, scalar
from .vectors import CONNECTION, INVERSION, CoefficientVector


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one exact identity check."""

    identity_id: str
    status: str  # "match", "mismatch", or "error"
    max_defect: GaussScalar
    witness: str

    def ok(self) -> bool:
        return self.status == "match"


def match_report(identity_id: str, witness: str = "") -> VerificationReport:
    return VerificationReport(identity_id, "match", ZERO, witness)


def mismatch_report(identity_id: str, defect: GaussScalar, witness: str = "") -> VerificationReport:
    return VerificationReport(identity_id, "mismatch", defect, witness)


def error_report(identity_id: str, witness: str) -> VerificationReport:
    return VerificationReport(identity_id, "error", ZERO, witness)


def _solve_triangular(
    target_polys: Sequence[Polynomial], source: Polynomial, provenance: str, kind: str
) -> CoefficientVector:
    """Back-substitute source against target polynomials of degrees 0..n."""
    n = len(target_polys) - 1
    residual = list(source.coeffs) + [ZERO] * (n + 1 - len(source.coeffs))
    values = [ZERO] * (n + 1)
    for m in range(n, -1, -1):
        lead = target_polys[m].coeffs[m] if target_polys[m].degree == m else ZERO
        if not lead:
            raise DegenerateLeadingCoefficient(
                f"target polynomial of degree {m} has vanishing leading coefficient"
            )
        c = residual[m] / lead
        values[m] = c
        if c:
            for k, t in enumerate(target_polys[m].coeffs):
                residual[k] = residual[k] - c * t
    if any(residual):
        raise ArithmeticError("triangular solve left a nonzero residual")
    return CoefficientVector(tuple(values), n, kind, provenance)


def oracle_connection(src: FamilyInstance, tgt: FamilyInstance, n: int) -> CoefficientVector:
    """C_m(n) by brute force: monomial expansion plus triangular solve."""
    if src.ctx.q != tgt.ctx.q:
        raise VariableMismatch("source and target instances use different q")
    if not variables_compatible(src.spec, tgt.spec):
        raise VariableMismatch(
            f"{src.spec.id} ({src.spec.variable}) and {tgt.spec.id} "
            f"({tgt.spec.variable}) do not share a working variable"
        )
    targets = [tgt.polynomial(m) for m in range(n + 1)]
    return _solve_triangular(targets, src.polynomial(n), "oracle", CONNECTION)


def oracle_inversion(inst: FamilyInstance, n: int) -> CoefficientVector:
    """I_m(n) by brute force, expanding the family's natural basis element."""
    targets = [inst.polynomial(m) for m in range(n + 1)]
    return _solve_triangular(targets, to_monomial(inst.basis_element(n)), "oracle", INVERSION)


def recursive_invert(table, n: int) -> CoefficientVector:
    """The general inversion recursion for a monic expansion table.

    table gives A_k(n), either as a callable table(n, k) or as nested
    sequences table[n][k], describing P_n = sum_k A_k(n) B_{n-k} with
    A_0(n) = 1 (monic).  Returns I_m(n) with B_n = sum_m I_m(n) P_m.
    """
    if callable(table):
        A = table
    else:
        A = lambda nn, kk: table[nn][kk]  # noqa: E731
    for j in range(n + 1):
        if scalar(A(j, 0)) != ONE:
            raise NonMonicInput(f"A_0({j}) = {scalar(A(j, 0)).literal()}, expected 1")
    # b[k] holds b_m(n, k) for the current m, k = 0..n-m
    b = [ONE] + [ZERO] * n
    out = [ZERO] * (n + 1)
    out[n] = b[0]
    for m in range(n):
        nxt = [ZERO] * (n - m)
        for k in range(n - m):
            nxt[k] = b[k + 1] - b[0] * scalar(A(n - m, k + 1))
        b = nxt
        out[n - m - 1] = b[0]
    return CoefficientVector(tuple(out), n, INVERSION, "lemma2.2")


def verify_pointwise(
    lhs: Callable[[GaussScalar], GaussScalar],
    rhs: Callable[[GaussScalar], GaussScalar],
    points: Sequence[GaussScalar],
    identity_id: str = "pointwise",
) -> VerificationReport:
    """Exact pointwise comparison; a match over enough distinct points is a
    proof of identity for polynomial identities of bounded degree."""
    if not points:
        raise ValueError("verify_pointwise needs at least one point")
    seen = set()
    for p in points:
        key = (p.re, p.im)
        if key in seen:
            raise ValueError("points must be pairwise distinct")
        seen.add(key)
    for p in points:
        try:
            defect = lhs(p) - rhs(p)
        except Exception as exc:
            return error_report(identity_id, f"evaluation failed at {p.literal()}: {exc}")
        if defect:
            return mismatch_report(identity_id, defect, f"point {p.literal()}")
    return match_report(identity_id, f"{len(points)} distinct points")


# Exact unit-circle points (re, im) with re^2 + im^2 = 1, used wherever an
# identity involves the circle variable.
UNIT_CIRCLE_POINTS: tuple[GaussScalar, ...] = tuple(
    GaussScalar(scalar(a).re / scalar(c).re, scalar(b).re / scalar(c).re)
    for a, b, c in (
        (3, 4, 5),
        (5, 12, 13),
        (8, 15, 17),
        (7, 24, 25),
        (20, 21, 29),
        (9, 40, 41),
        (12, 35, 37),
        (11, 60, 61),
        (28, 45, 53),
        (16, 63, 65),
        (33, 56, 65),
        (13, 84, 85),
        (48, 55, 73),
        (36, 77, 85),
    )
)


def integer_points(count: int) -> tuple[GaussScalar, ...]:
    """The exact points 0, 1, ..., count-1."""
    return tuple(GaussScalar(k) for k in range(count))
