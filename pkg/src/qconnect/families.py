"""Registry of basic hypergeometric polynomial families.

Each family knows three things: its natural basis (a tagged Basis over the
working variable y), the series data that expands its degree-n member over
that basis, and its normalizing prefactor.  The series data is stored in a
canonical shape shared by every family:

    coefficient of B_k in P_n  =  prefactor(n) *
        (q^-n;q)_k (A q^n;q)_k [num;q]_k / ([den;q]_k (q;q)_k)
        * ((-1)^k q^binom(k,2))^E * (arg_base * q^(arg_n_power*n))^k

where the (A q^n;q)_k factor is present only when the family has a second
n-bound numerator slot, num may contain zeros standing for numerator
parameters consumed by the basis, and E = len(den) - len(num) - slot.
This one shape drives polynomial construction, the closed-form coefficient
engines, and the brute-force oracle alike.

Classical (q-free) families use the analogous rising-factorial shape.

Working variables differ per family (x, q^-x, 2cos(theta), two-point sums);
the registry records a coarse compatibility tag plus a human note, and all
polynomials are expressed in the abstract variable y.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import (
    BindingError,
    DegenerateLeadingCoefficient,
    PreconditionViolated,
    UnknownFamily,
)
from .phi import PhiSpec, hyp_term_coefficients, term_coefficients
from .poly import (
    Basis,
    Polynomial,
    basis_element as poly_basis_element,
    imaginary_shifted,
    linear_combination,
    monomial,
    paired_product,
    q_shifted,
    shifted_nodes,
)
from .scalar import (
    GaussScalar,
    I,
    ONE,
    QContext,
    ZERO,
    qbinomial,
    qpochhammer,
    qpochhammer_multi,
    rising_factorial,
    scalar,
)

Bindings = dict[str, GaussScalar]


@dataclass(frozen=True)
class QCanon:
    """Canonical series data for a q-family (see module docstring)."""

    a_slot: bool
    a: GaussScalar
    num: tuple[GaussScalar, ...]
    den: tuple[GaussScalar, ...]
    arg_base: GaussScalar
    arg_n_power: int

    @property
    def exponent(self) -> int:
        return len(self.den) - len(self.num) - (1 if self.a_slot else 0)


@dataclass(frozen=True)
class ClassicalCanon:
    """Canonical series data for a classical (rising-factorial) family."""

    l_slot: bool
    lam: GaussScalar
    num: tuple[GaussScalar, ...]
    den: tuple[GaussScalar, ...]


@dataclass(frozen=True)
class FamilySpec:
    """Declarative description of one registered family."""

    id: str
    parameters: tuple[str, ...]
    kind: str  # "q" or "classical"
    variable: str
    variable_note: str
    expansion_capable: bool = True
    basis_builder: Callable[[Bindings, QContext], Basis] | None = None
    canon_builder: Callable[[Bindings, QContext], object] | None = None
    prefactor: Callable[[Bindings, QContext, int], GaussScalar] | None = None
    constraints: tuple = ()
    finite_support_note: str | None = None
    poly_override: Callable[[Bindings, QContext, int], Polynomial] | None = None

    def variadic_prefixes(self) -> tuple[str, ...]:
        return tuple(p[:-1] for p in self.parameters if p.endswith("*"))

    def fixed_parameters(self) -> tuple[str, ...]:
        return tuple(p for p in self.parameters if not p.endswith("*"))


_REGISTRY: dict[str, FamilySpec] = {}


def _register(spec: FamilySpec) -> None:
    _REGISTRY[spec.id] = spec


def registry_lookup(family_id: str) -> FamilySpec:
    """Fetch a family spec by id; raises UnknownFamily otherwise."""
    try:
        return _REGISTRY[family_id]
    except KeyError:
        raise UnknownFamily(f"no registered family with id {family_id!r}") from None


def registry_ids() -> tuple[str, ...]:
    return tuple(sorted(_REGISTRY))


def _plist(b: Bindings, prefix: str) -> tuple[GaussScalar, ...]:
    out = []
    i = 1
    while f"{prefix}{i}" in b:
        out.append(b[f"{prefix}{i}"])
        i += 1
    return tuple(out)


def _int_binding(b: Bindings, name: str) -> int:
    v = b[name]
    if not v.is_integer() or v.re < 0:
        raise BindingError(f"parameter {name!r} must be a non-negative integer")
    return int(v.re)


class FamilyInstance:
    """A family bound to parameter values over one q-context.

    Construction validates the binding names, the family's constraints, and
    non-degeneracy (nonzero leading coefficients) for every degree up to the
    context's max_degree.  Instances are immutable; polynomials are cached.
    """

    def __init__(self, spec: FamilySpec, bindings: Bindings, ctx: QContext):
        self.spec = spec
        self.bindings = {k: scalar(v) for k, v in bindings.items()}
        self.ctx = ctx
        self._check_binding_names()
        for description, predicate in spec.constraints:
            if not predicate(self.bindings, ctx):
                raise PreconditionViolated(f"{spec.id}: {description}")
        self._polys: dict[int, Polynomial] = {}
        self._canon = None
        self._basis = None
        if spec.expansion_capable and spec.poly_override is None:
            self.basis()
            self._validate_nondegenerate()

    def _check_binding_names(self) -> None:
        fixed = set(self.spec.fixed_parameters())
        prefixes = self.spec.variadic_prefixes()
        seen_fixed = set()
        for name in self.bindings:
            if name in fixed:
                seen_fixed.add(name)
                continue
            if any(
                name.startswith(p) and name[len(p):].isdigit() and name[len(p)] != "0"
                for p in prefixes
            ):
                continue
            raise BindingError(
                f"family {self.spec.id!r} does not declare parameter {name!r}"
            )
        missing = fixed - seen_fixed
        if missing:
            raise BindingError(
                f"family {self.spec.id!r} is missing bindings for {sorted(missing)}"
            )
        for p in prefixes:
            values = _plist(self.bindings, p)
            extra = [k for k in self.bindings if k.startswith(p) and k[len(p):].isdigit()]
            if len(extra) != len(values):
                raise BindingError(
                    f"variadic parameters {p}1..{p}k must be contiguous from {p}1"
                )

    # -- canonical pieces --------------------------------------------------

    def basis(self) -> Basis:
        if self._basis is None:
            if self.spec.basis_builder is None:
                raise UnknownFamily(f"family {self.spec.id!r} has no polynomial basis")
            try:
                self._basis = self.spec.basis_builder(self.bindings, self.ctx)
            except ValueError as exc:
                raise DegenerateLeadingCoefficient(str(exc)) from None
        return self._basis

    def canon(self):
        if self._canon is None:
            self._canon = self.spec.canon_builder(self.bindings, self.ctx)
        return self._canon

    def prefactor(self, n: int) -> GaussScalar:
        if self.spec.prefactor is None:
            return ONE
        return self.spec.prefactor(self.bindings, self.ctx, n)

    def series_coeffs(self, n: int) -> tuple[GaussScalar, ...]:
        """Coefficients c_0..c_n of P_n over the natural basis, prefactor excluded."""
        canon = self.canon()
        if isinstance(canon, ClassicalCanon):
            num = (GaussScalar(-n),) + (
                (canon.lam + n,) if canon.l_slot else ()
            ) + canon.num
            return hyp_term_coefficients(num, canon.den, n, ONE)
        ctx = self.ctx
        num = (ctx.qpow(-n),)
        if canon.a_slot:
            num = num + (canon.a * ctx.qpow(n),)
        num = num + canon.num
        spec = PhiSpec(num, canon.den, ctx, n, _explicit=True)
        z = canon.arg_base * ctx.qpow(canon.arg_n_power * n)
        return term_coefficients(spec, z)

    def definition_coeffs(self, n: int) -> tuple[GaussScalar, ...]:
        """D_k(n): the expansion of P_n over its natural basis, prefactor included."""
        pi = self.prefactor(n)
        return tuple(pi * c for c in self.series_coeffs(n))

    # -- polynomials ---------------------------------------------------------

    def polynomial(self, n: int) -> Polynomial:
        """P_n in the monomial basis of the working variable y."""
        self.ctx.check_degree(n)
        p = self._polys.get(n)
        if p is None:
            if self.spec.poly_override is not None:
                p = self.spec.poly_override(self.bindings, self.ctx, n)
            else:
                basis = self.basis()
                coeffs = self.definition_coeffs(n)
                p = linear_combination(
                    (c, poly_basis_element(basis, k)) for k, c in enumerate(coeffs)
                )
            if p.degree != n:
                raise DegenerateLeadingCoefficient(
                    f"{self.spec.id}: polynomial of degree {n} degenerates"
                )
            # idempotent write: concurrent fills compute equal values
            self._polys[n] = p
        return p

    def basis_element(self, n: int) -> Polynomial:
        """The family's natural B_n, expanded in the monomial basis."""
        return poly_basis_element(self.basis(), n)

    def _validate_nondegenerate(self) -> None:
        canon = self.canon()
        ctx = self.ctx
        md = ctx.max_degree
        if isinstance(canon, ClassicalCanon):
            for n in range(md + 1):
                if canon.l_slot and not rising_factorial(canon.lam + n, n):
                    raise DegenerateLeadingCoefficient(
                        f"{self.spec.id}: (lambda+n)_n vanishes at n={n}"
                    )
            for u in canon.num:
                if u.is_integer() and -md < u.re < 0:
                    raise DegenerateLeadingCoefficient(
                        f"{self.spec.id}: numerator parameter {u} truncates early"
                    )
            for v in canon.den:
                if rising_factorial(v, md) == ZERO:
                    raise DegenerateLeadingCoefficient(
                        f"{self.spec.id}: denominator parameter {v} vanishes in range"
                    )
            return
        if not canon.arg_base:
            raise DegenerateLeadingCoefficient(f"{self.spec.id}: zero series argument")
        if qpochhammer_multi(canon.num, ctx.q, md) == ZERO:
            raise DegenerateLeadingCoefficient(
                f"{self.spec.id}: a numerator parameter is q^-j for j < {md}"
            )
        if qpochhammer_multi(canon.den, ctx.q, md) == ZERO:
            raise DegenerateLeadingCoefficient(
                f"{self.spec.id}: a denominator parameter is q^-j for j < {md}"
            )
        if canon.a_slot:
            for n in range(1, md + 1):
                if not qpochhammer(canon.a * ctx.qpow(n), ctx.q, n):
                    raise DegenerateLeadingCoefficient(
                        f"{self.spec.id}: (A q^n;q)_n vanishes at n={n}"
                    )

    def __repr__(self):
        parts = ", ".join(f"{k}={v.literal()}" for k, v in sorted(self.bindings.items()))
        return f"<{self.spec.id}({parts}) over {self.ctx!r}>"


def make_instance(family_id: str, bindings, ctx: QContext) -> FamilyInstance:
    """Bind a registered family to parameter values."""
    spec = registry_lookup(family_id)
    return FamilyInstance(spec, {k: scalar(v) for k, v in bindings.items()}, ctx)


def family_polynomial(inst: FamilyInstance, n: int) -> Polynomial:
    """P_n of the bound family, exactly, in the monomial basis."""
    return inst.polynomial(n)


def family_basis_element(inst: FamilyInstance, n: int) -> Polynomial:
    """The family's natural basis element B_n, in the monomial basis."""
    return inst.basis_element(n)


# ---------------------------------------------------------------------------
# Registry entries
# ---------------------------------------------------------------------------

def _register_q(
    fam_id,
    params,
    variable,
    note,
    basis_builder,
    canon_builder,
    prefactor=None,
    constraints=(),
    finite_support_note=None,
):
    _register(
        FamilySpec(
            id=fam_id,
            parameters=tuple(params),
            kind="q",
            variable=variable,
            variable_note=note,
            basis_builder=basis_builder,
            canon_builder=canon_builder,
            prefactor=prefactor,
            constraints=tuple(constraints),
            finite_support_note=finite_support_note,
        )
    )


# -- families on the two-point product basis over y = 2cos(theta) ----------

_register_q(
    "askey-wilson",
    ("a", "b", "c", "d"),
    "cos",
    "y = 2x = 2cos(theta); basis pairs the points a e^{+-i theta}",
    lambda b, ctx: paired_product(ctx, b["a"], b["a"] * b["a"]),
    lambda b, ctx: QCanon(
        True,
        b["a"] * b["b"] * b["c"] * b["d"] / ctx.q,
        (ZERO, ZERO),
        (b["a"] * b["b"], b["a"] * b["c"], b["a"] * b["d"]),
        ctx.q,
        0,
    ),
    prefactor=lambda b, ctx, n: qpochhammer_multi(
        (b["a"] * b["b"], b["a"] * b["c"], b["a"] * b["d"]), ctx.q, n
    )
    / b["a"] ** n,
)

_register_q(
    "continuous-dual-q-hahn",
    ("a", "b", "c"),
    "cos",
    "y = 2x = 2cos(theta); basis pairs the points a e^{+-i theta}",
    lambda b, ctx: paired_product(ctx, b["a"], b["a"] * b["a"]),
    lambda b, ctx: QCanon(
        False, ZERO, (ZERO, ZERO), (b["a"] * b["b"], b["a"] * b["c"]), ctx.q, 0
    ),
    prefactor=lambda b, ctx, n: qpochhammer_multi(
        (b["a"] * b["b"], b["a"] * b["c"]), ctx.q, n
    )
    / b["a"] ** n,
)

_register_q(
    "al-salam-chihara",
    ("a", "b"),
    "cos",
    "y = 2x = 2cos(theta); basis pairs the points a e^{+-i theta}",
    lambda b, ctx: paired_product(ctx, b["a"], b["a"] * b["a"]),
    lambda b, ctx: QCanon(False, ZERO, (ZERO, ZERO), (b["a"] * b["b"], ZERO), ctx.q, 0),
    prefactor=lambda b, ctx, n: qpochhammer(b["a"] * b["b"], ctx.q, n) / b["a"] ** n,
)

_register_q(
    "continuous-big-q-hermite",
    ("a",),
    "cos",
    "y = 2x = 2cos(theta); basis pairs the points a e^{+-i theta}",
    lambda b, ctx: paired_product(ctx, b["a"], b["a"] * b["a"]),
    lambda b, ctx: QCanon(False, ZERO, (ZERO, ZERO), (ZERO, ZERO), ctx.q, 0),
    prefactor=lambda b, ctx, n: ONE / b["a"] ** n,
)

_register_q(
    "continuous-q-jacobi",
    ("a2", "b2", "sq"),
    "cos",
    "y = 2x = 2cos(theta); a2, b2 bind the q-power basis points, sq = q^(1/2)",
    lambda b, ctx: paired_product(ctx, b["a2"], b["a2"] * b["a2"]),
    lambda b, ctx: QCanon(
        True,
        (b["a2"] * b["b2"]) ** 2,
        (ZERO, ZERO),
        (
            b["a2"] * b["a2"] * b["sq"],
            -(b["a2"] * b["b2"]),
            -(b["a2"] * b["b2"] * b["sq"]),
        ),
        ctx.q,
        0,
    ),
    prefactor=lambda b, ctx, n: qpochhammer(b["a2"] * b["a2"] * b["sq"], ctx.q, n)
    / ctx.qq(n),
    constraints=(("sq*sq == q", lambda b, ctx: b["sq"] * b["sq"] == ctx.q),),
)

_register_q(
    "continuous-q-ultraspherical",
    ("b2", "sq"),
    "cos",
    "y = 2x = 2cos(theta); b2 binds the square root of the family parameter",
    lambda b, ctx: paired_product(ctx, b["b2"], b["b2"] * b["b2"]),
    lambda b, ctx: QCanon(
        True,
        b["b2"] ** 4,
        (ZERO, ZERO),
        (b["b2"] * b["b2"] * b["sq"], -(b["b2"] * b["b2"]), -(b["b2"] * b["b2"] * b["sq"])),
        ctx.q,
        0,
    ),
    prefactor=lambda b, ctx, n: qpochhammer(b["b2"] ** 4, ctx.q, n)
    / (ctx.qq(n) * b["b2"] ** n),
    constraints=(("sq*sq == q", lambda b, ctx: b["sq"] * b["sq"] == ctx.q),),
)

_register_q(
    "continuous-q-legendre",
    ("q4",),
    "cos",
    "y = 2x = 2cos(theta); q4 = q^(1/4) binds the basis points",
    lambda b, ctx: paired_product(ctx, b["q4"], b["q4"] * b["q4"]),
    lambda b, ctx: QCanon(
        True,
        ctx.q,
        (ZERO, ZERO),
        (ctx.q, -(b["q4"] * b["q4"]), -ctx.q),
        ctx.q,
        0,
    ),
    constraints=(("q4^4 == q", lambda b, ctx: b["q4"] ** 4 == ctx.q),),
)

_register_q(
    "continuous-q-laguerre",
    ("a2", "sq"),
    "cos",
    "y = 2x = 2cos(theta); a2 binds the q-power basis point, sq = q^(1/2)",
    lambda b, ctx: paired_product(ctx, b["a2"], b["a2"] * b["a2"]),
    lambda b, ctx: QCanon(
        False, ZERO, (ZERO, ZERO), (b["a2"] * b["a2"] * b["sq"], ZERO), ctx.q, 0
    ),
    prefactor=lambda b, ctx, n: qpochhammer(b["a2"] * b["a2"] * b["sq"], ctx.q, n)
    / ctx.qq(n),
    constraints=(("sq*sq == q", lambda b, ctx: b["sq"] * b["sq"] == ctx.q),),
)

# -- families with a rotated two-point basis over y = 2cos(theta+phi) ------

_register_q(
    "continuous-q-hahn",
    ("a", "b", "c", "d", "w"),
    "cosphi",
    "y = 2cos(theta+phi); w binds the unit-circle point for phi",
    lambda b, ctx: paired_product(ctx, b["a"] * b["w"], (b["a"] * b["w"]) ** 2),
    lambda b, ctx: QCanon(
        True,
        b["a"] * b["b"] * b["c"] * b["d"] / ctx.q,
        (ZERO, ZERO),
        (b["a"] * b["b"] * b["w"] * b["w"], b["a"] * b["c"], b["a"] * b["d"]),
        ctx.q,
        0,
    ),
    prefactor=lambda b, ctx, n: qpochhammer_multi(
        (b["a"] * b["b"] * b["w"] * b["w"], b["a"] * b["c"], b["a"] * b["d"]),
        ctx.q,
        n,
    )
    / (b["a"] * b["w"]) ** n,
)

_register_q(
    "q-meixner-pollaczek",
    ("a", "w"),
    "cosphi",
    "y = 2cos(theta+phi); w binds the unit-circle point for phi",
    lambda b, ctx: paired_product(ctx, b["a"] * b["w"], (b["a"] * b["w"]) ** 2),
    lambda b, ctx: QCanon(
        False, ZERO, (ZERO, ZERO), (b["a"] * b["a"], ZERO), ctx.q, 0
    ),
    prefactor=lambda b, ctx, n: qpochhammer(b["a"] * b["a"], ctx.q, n)
    / (ctx.qq(n) * (b["a"] * b["w"]) ** n),
)

# -- families on the paired basis over two-point lattice variables ---------

_register_q(
    "q-racah",
    ("alpha", "beta", "gamma", "delta"),
    "nu",
    "y = q^-x + gamma*delta*q^(x+1)",
    lambda b, ctx: paired_product(ctx, ONE, b["gamma"] * b["delta"] * ctx.q),
    lambda b, ctx: QCanon(
        True,
        b["alpha"] * b["beta"] * ctx.q,
        (ZERO, ZERO),
        (
            b["alpha"] * ctx.q,
            b["beta"] * b["delta"] * ctx.q,
            b["gamma"] * ctx.q,
        ),
        ctx.q,
        0,
    ),
    finite_support_note="orthogonality needs alpha*q = q^-N for an integer N",
)

_register_q(
    "dual-q-hahn",
    ("gamma", "delta", "qN"),
    "nu",
    "y = q^-x + gamma*delta*q^(x+1); qN binds q^-N",
    lambda b, ctx: paired_product(ctx, ONE, b["gamma"] * b["delta"] * ctx.q),
    lambda b, ctx: QCanon(
        False, ZERO, (ZERO, ZERO), (b["gamma"] * ctx.q, b["qN"]), ctx.q, 0
    ),
    finite_support_note="orthogonality needs qN = q^-N for an integer N",
)

_register_q(
    "dual-q-krawtchouk",
    ("c", "qN"),
    "lambda",
    "y = q^-x + c*q^(x-N); qN binds q^-N",
    lambda b, ctx: paired_product(ctx, ONE, b["c"] * b["qN"]),
    lambda b, ctx: QCanon(False, ZERO, (ZERO, ZERO), (b["qN"], ZERO), ctx.q, 0),
    finite_support_note="orthogonality needs qN = q^-N for an integer N",
)

# -- families on the q-shifted basis over y = x or y = q^-x ----------------

_register_q(
    "big-q-jacobi",
    ("a", "b", "c"),
    "x",
    "y = x; basis (x;q)_n",
    lambda b, ctx: q_shifted(ctx),
    lambda b, ctx: QCanon(
        True,
        b["a"] * b["b"] * ctx.q,
        (ZERO,),
        (b["a"] * ctx.q, b["c"] * ctx.q),
        ctx.q,
        0,
    ),
)

_register_q(
    "big-q-laguerre",
    ("a", "b"),
    "x",
    "y = x; basis (x;q)_n",
    lambda b, ctx: q_shifted(ctx),
    lambda b, ctx: QCanon(
        False, ZERO, (ZERO, ZERO), (b["a"] * ctx.q, b["b"] * ctx.q), ctx.q, 0
    ),
)

_register_q(
    "q-hahn",
    ("alpha", "beta", "qN"),
    "qminusx",
    "y = q^-x; qN binds q^-N",
    lambda b, ctx: q_shifted(ctx),
    lambda b, ctx: QCanon(
        True,
        b["alpha"] * b["beta"] * ctx.q,
        (ZERO,),
        (b["alpha"] * ctx.q, b["qN"]),
        ctx.q,
        0,
    ),
    finite_support_note="orthogonality needs qN = q^-N for an integer N",
)

_register_q(
    "q-meixner",
    ("b", "c"),
    "qminusx",
    "y = q^-x",
    lambda b, ctx: q_shifted(ctx),
    lambda b, ctx: QCanon(
        False, ZERO, (ZERO,), (b["b"] * ctx.q,), -(ctx.q / b["c"]), 1
    ),
)

_register_q(
    "quantum-q-krawtchouk",
    ("p", "qN"),
    "qminusx",
    "y = q^-x; qN binds q^-N",
    lambda b, ctx: q_shifted(ctx),
    lambda b, ctx: QCanon(False, ZERO, (ZERO,), (b["qN"],), b["p"] * ctx.q, 1),
    finite_support_note="orthogonality needs qN = q^-N for an integer N",
)

_register_q(
    "q-krawtchouk",
    ("p", "qN"),
    "qminusx",
    "y = q^-x; qN binds q^-N",
    lambda b, ctx: q_shifted(ctx),
    lambda b, ctx: QCanon(True, -b["p"], (ZERO,), (b["qN"], ZERO), ctx.q, 0),
    finite_support_note="orthogonality needs qN = q^-N for an integer N",
)

_register_q(
    "affine-q-krawtchouk",
    ("p", "qN"),
    "qminusx",
    "y = q^-x; qN binds q^-N",
    lambda b, ctx: q_shifted(ctx),
    lambda b, ctx: QCanon(
        False, ZERO, (ZERO, ZERO), (b["p"] * ctx.q, b["qN"]), ctx.q, 0
    ),
    finite_support_note="orthogonality needs qN = q^-N for an integer N",
)

_register_q(
    "q-charlier",
    ("a",),
    "qminusx",
    "y = q^-x",
    lambda b, ctx: q_shifted(ctx),
    lambda b, ctx: QCanon(False, ZERO, (ZERO,), (ZERO,), -(ctx.q / b["a"]), 1),
)

_register_q(
    "al-salam-carlitz-2",
    ("a",),
    "x",
    "y = x; basis (x;q)_n",
    lambda b, ctx: q_shifted(ctx),
    lambda b, ctx: QCanon(False, ZERO, (ZERO,), (), ONE / b["a"], 1),
    prefactor=lambda b, ctx, n: (-b["a"]) ** n * ctx.qpow(-(n * (n - 1) // 2)),
)

_register_q(
    "discrete-q-hermite-2",
    (),
    "x",
    "y = x; basis (ix;q)_n",
    lambda b, ctx: imaginary_shifted(ctx),
    lambda b, ctx: QCanon(False, ZERO, (ZERO,), (), -ONE, 1),
    prefactor=lambda b, ctx, n: (-I) ** n * ctx.qpow(-(n * (n - 1) // 2)),
)

# -- families on the monomial basis over y = x ------------------------------

_register_q(
    "little-q-jacobi",
    ("a", "b"),
    "x",
    "y = x",
    lambda b, ctx: monomial(ctx),
    lambda b, ctx: QCanon(
        True, b["a"] * b["b"] * ctx.q, (), (b["a"] * ctx.q,), ctx.q, 0
    ),
)

_register_q(
    "little-q-legendre",
    (),
    "x",
    "y = x",
    lambda b, ctx: monomial(ctx),
    lambda b, ctx: QCanon(True, ctx.q, (), (ctx.q,), ctx.q, 0),
)

_register_q(
    "little-q-laguerre",
    ("a",),
    "x",
    "y = x",
    lambda b, ctx: monomial(ctx),
    lambda b, ctx: QCanon(False, ZERO, (ZERO,), (b["a"] * ctx.q,), ctx.q, 0),
)

_register_q(
    "q-laguerre",
    ("qa",),
    "x",
    "y = x; qa binds the q-power of the family parameter",
    lambda b, ctx: monomial(ctx),
    lambda b, ctx: QCanon(
        False, ZERO, (), (b["qa"] * ctx.q,), -(b["qa"] * ctx.q), 1
    ),
    prefactor=lambda b, ctx, n: qpochhammer(b["qa"] * ctx.q, ctx.q, n) / ctx.qq(n),
)

_register_q(
    "alternative-q-charlier",
    ("a",),
    "x",
    "y = x",
    lambda b, ctx: monomial(ctx),
    lambda b, ctx: QCanon(True, -b["a"], (), (ZERO,), ctx.q, 0),
)

_register_q(
    "stieltjes-wigert",
    (),
    "x",
    "y = x",
    lambda b, ctx: monomial(ctx),
    lambda b, ctx: QCanon(False, ZERO, (), (ZERO,), -ctx.q, 1),
    prefactor=lambda b, ctx, n: ONE / ctx.qq(n),
)

# -- families on the shifted-nodes basis over y = x -------------------------

_register_q(
    "al-salam-carlitz-1",
    ("a",),
    "x",
    "y = x; basis x^n (x^-1;q)_n",
    lambda b, ctx: shifted_nodes(ctx),
    lambda b, ctx: QCanon(False, ZERO, (ZERO,), (ZERO,), ctx.q / b["a"], 0),
    prefactor=lambda b, ctx, n: (-b["a"]) ** n * ctx.qpow(n * (n - 1) // 2),
)

_register_q(
    "discrete-q-hermite-1",
    (),
    "x",
    "y = x; basis x^n (x^-1;q)_n",
    lambda b, ctx: shifted_nodes(ctx),
    lambda b, ctx: QCanon(False, ZERO, (ZERO,), (ZERO,), -ctx.q, 0),
    prefactor=lambda b, ctx, n: ctx.qpow(n * (n - 1) // 2),
)

# -- the multi-denominator (d-fold) families --------------------------------

_register_q(
    "d-little-q-laguerre",
    ("d", "b*"),
    "x",
    "y = x; d zero numerator slots over denominators b1..bs",
    lambda b, ctx: monomial(ctx),
    lambda b, ctx: QCanon(
        False, ZERO, (ZERO,) * _int_binding(b, "d"), _plist(b, "b"), ctx.q, 0
    ),
)

_register_q(
    "d-q-meixner",
    ("c", "b*"),
    "qminusx",
    "y = q^-x; denominators b1..bd",
    lambda b, ctx: q_shifted(ctx),
    lambda b, ctx: QCanon(False, ZERO, (ZERO,), _plist(b, "b"), -(ctx.q / b["c"]), 1),
)

_register_q(
    "d-big-q-laguerre",
    ("b*",),
    "x",
    "y = x; denominators b1..b(d+1)",
    lambda b, ctx: q_shifted(ctx),
    lambda b, ctx: QCanon(
        False, ZERO, (ZERO,) * len(_plist(b, "b")), _plist(b, "b"), ctx.q, 0
    ),
)

_register_q(
    "d-q-laguerre",
    ("b*",),
    "x",
    "y = x; denominators b1..bd",
    lambda b, ctx: monomial(ctx),
    lambda b, ctx: QCanon(False, ZERO, (), _plist(b, "b"), ONE, 1),
)

# -- the generic classes -----------------------------------------------------

_register_q(
    "generic-q",
    ("a*", "b*"),
    "x",
    "y = x; free numerator list a1..ar over denominator list b1..bs",
    lambda b, ctx: monomial(ctx),
    lambda b, ctx: QCanon(False, ZERO, _plist(b, "a"), _plist(b, "b"), ctx.q, 0),
)

_register_q(
    "generic-q-a",
    ("a", "a*", "b*"),
    "x",
    "y = x; n-bound slot a plus free lists a1..ar, b1..bs",
    lambda b, ctx: monomial(ctx),
    lambda b, ctx: QCanon(True, b["a"], _plist(b, "a"), _plist(b, "b"), ctx.q, 0),
)

_register(
    FamilySpec(
        id="generic-hyp",
        parameters=("a*", "b*"),
        kind="classical",
        variable="x",
        variable_note="y = x; terminating rising-factorial sum",
        basis_builder=lambda b, ctx: monomial(ctx),
        canon_builder=lambda b, ctx: ClassicalCanon(
            False, ZERO, _plist(b, "a"), _plist(b, "b")
        ),
    )
)

_register(
    FamilySpec(
        id="generic-hyp-lambda",
        parameters=("lambda", "a*", "b*"),
        kind="classical",
        variable="x",
        variable_note="y = x; n-bound slot lambda plus free lists",
        basis_builder=lambda b, ctx: monomial(ctx),
        canon_builder=lambda b, ctx: ClassicalCanon(
            True, b["lambda"], _plist(b, "a"), _plist(b, "b")
        ),
    )
)

# -- degenerate helpers -------------------------------------------------------

_register(
    FamilySpec(
        id="monomial",
        parameters=(),
        kind="q",
        variable="any",
        variable_note="P_n(y) = y^n; target for extracting definition coefficients",
        basis_builder=lambda b, ctx: monomial(ctx),
        poly_override=lambda b, ctx, n: Polynomial(
            monomial(ctx), tuple([ZERO] * n + [ONE])
        ),
    )
)

_register(
    FamilySpec(
        id="continuous-q-hermite",
        parameters=(),
        kind="q",
        variable="cos",
        variable_note="x = cos(theta); verified pointwise on unit-circle points only",
        expansion_capable=False,
    )
)


# ---------------------------------------------------------------------------
# Continuous q-Hermite pointwise machinery
# ---------------------------------------------------------------------------

def continuous_q_hermite_value(ctx: QContext, n: int, z: GaussScalar) -> GaussScalar:
    """H_n(cos theta) evaluated exactly through z = e^{i theta}.

    Uses the exact expansion sum_k qbinom(n,k) z^{n-2k}; z may be any
    nonzero Gaussian scalar, unit-circle points giving the real picture.
    """
    total = ZERO
    zinv = ONE / z
    for k in range(n + 1):
        total = total + qbinomial(n, k, ctx) * z ** (n - k) * zinv**k
    return total


def continuous_q_hermite_basis_value(n: int, z: GaussScalar) -> GaussScalar:
    """The n-th inversion target e^{-2 i n theta} evaluated through z."""
    return (ONE / z) ** (2 * n)


def variables_compatible(a: FamilySpec, b: FamilySpec) -> bool:
    """Whether two families share working-variable semantics."""
    return a.variable == "any" or b.variable == "any" or a.variable == b.variable
