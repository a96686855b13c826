"""Dense univariate polynomials over exact scalars, in tagged bases.

A polynomial carries the basis its coefficient vector refers to.  Every
tagged basis element expands exactly into the monomial basis as a product
of linear factors in the working variable y, so conversion is a finite,
exact computation.  Coefficient vectors are canonical: trailing zeros are
stripped, and the zero polynomial is the empty vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import MixedContexts
from .scalar import GaussScalar, I, ONE, QContext, ZERO, scalar

MONOMIAL = "monomial"
Q_SHIFTED = "q_shifted"
PAIRED_PRODUCT = "paired_product"
SHIFTED_NODES = "shifted_nodes"
IMAGINARY_SHIFTED = "imaginary_shifted"


@dataclass(frozen=True, eq=False)
class Basis:
    """A tagged polynomial basis over one q-context.

    kind selects the element family B_n(y):
      monomial           y^n
      q_shifted          (y;q)_n = prod_j (1 - y q^j)
      paired_product     prod_j (1 - alpha q^j y + tau q^{2j})
      shifted_nodes      prod_j (y - q^j)
      imaginary_shifted  prod_j (1 - i y q^j)

    Element 0 is the constant 1 for every kind, and element n has exact
    degree n (for paired_product this requires alpha != 0, which the
    constructor enforces).  Bases compare by mathematical content: kind,
    the value of q, and the parameters; the owning context's identity does
    not matter.
    """

    kind: str
    ctx: QContext
    alpha: GaussScalar | None = None
    tau: GaussScalar | None = None

    def __post_init__(self):
        if self.kind == PAIRED_PRODUCT:
            if self.alpha is None or self.tau is None:
                raise ValueError("paired_product basis needs alpha and tau")
            if not self.alpha:
                raise ValueError("paired_product basis needs alpha != 0")
        elif self.alpha is not None or self.tau is not None:
            raise ValueError(f"{self.kind} basis takes no parameters")

    def _key(self):
        return (self.kind, self.ctx.q, self.alpha, self.tau)

    def __eq__(self, other):
        if not isinstance(other, Basis):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())


def monomial(ctx: QContext) -> Basis:
    return Basis(MONOMIAL, ctx)


def q_shifted(ctx: QContext) -> Basis:
    return Basis(Q_SHIFTED, ctx)


def paired_product(ctx: QContext, alpha, tau) -> Basis:
    return Basis(PAIRED_PRODUCT, ctx, scalar(alpha), scalar(tau))


def shifted_nodes(ctx: QContext) -> Basis:
    return Basis(SHIFTED_NODES, ctx)


def imaginary_shifted(ctx: QContext) -> Basis:
    return Basis(IMAGINARY_SHIFTED, ctx)


@dataclass(frozen=True)
class Polynomial:
    """Coefficients against a tagged basis, lowest index first."""

    basis: Basis
    coeffs: tuple[GaussScalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @property
    def degree(self) -> int:
        """Degree in the basis index; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs


def _strip(coeffs) -> tuple[GaussScalar, ...]:
    cs = list(coeffs)
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


def _add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] = out[k] + c
    return _strip(out)


def _scale(c, coeffs):
    if not c:
        return ()
    return _strip([c * x for x in coeffs])


def _mul(a, b):
    if not a or not b:
        return ()
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    return _strip(out)


def _eval(coeffs, y: GaussScalar) -> GaussScalar:
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * y + c
    return acc


def _factor(basis: Basis, j: int) -> tuple[GaussScalar, ...]:
    """The j-th linear (monomial-basis) factor of basis element products."""
    qj = basis.ctx.qpow(j)
    if basis.kind == Q_SHIFTED:
        return (ONE, -qj)
    if basis.kind == PAIRED_PRODUCT:
        return (ONE + basis.tau * basis.ctx.qpow(2 * j), -(basis.alpha * qj))
    if basis.kind == SHIFTED_NODES:
        return (-qj, ONE)
    if basis.kind == IMAGINARY_SHIFTED:
        return (ONE, -(I * qj))
    raise ValueError(f"unknown basis kind {basis.kind!r}")


@lru_cache(maxsize=None)
def _basis_element_coeffs(basis: Basis, n: int) -> tuple[GaussScalar, ...]:
    if basis.kind == MONOMIAL:
        return tuple([ZERO] * n + [ONE])
    if n == 0:
        return (ONE,)
    prev = _basis_element_coeffs(basis, n - 1)
    return _mul(prev, _factor(basis, n - 1))


def basis_element(basis: Basis, n: int) -> Polynomial:
    """Exact monomial expansion of basis element B_n."""
    basis.ctx.check_degree(n)
    return Polynomial(monomial(basis.ctx), _basis_element_coeffs(basis, n))


def to_monomial(p: Polynomial) -> Polynomial:
    """Rewrite p exactly in the monomial basis."""
    if p.basis.kind == MONOMIAL:
        return p
    acc = ()
    for k, c in enumerate(p.coeffs):
        if c:
            acc = _add(acc, _scale(c, _basis_element_coeffs(p.basis, k)))
    return Polynomial(monomial(p.basis.ctx), acc)


def poly_eval(p: Polynomial, y) -> GaussScalar:
    """Exact evaluation at y.

    Product bases are evaluated directly from their factored form; the
    result agrees exactly with evaluating the monomial expansion.
    """
    y = scalar(y)
    if p.basis.kind == MONOMIAL:
        return _eval(p.coeffs, y)
    acc = ZERO
    element = ONE
    for k, c in enumerate(p.coeffs):
        if k > 0:
            element = element * _eval(_factor(p.basis, k - 1), y)
        if c:
            acc = acc + c * element
    return acc


def linear_combination(terms) -> Polynomial:
    """Sum of scalar multiples of polynomials, in the monomial basis."""
    terms = list(terms)
    if not terms:
        raise ValueError("linear_combination needs at least one term")
    ctx = terms[0][1].basis.ctx
    acc = ()
    for c, p in terms:
        if p.basis.ctx.q != ctx.q:
            raise MixedContexts("polynomials belong to different q-contexts")
        acc = _add(acc, _scale(scalar(c), to_monomial(p).coeffs))
    return Polynomial(monomial(ctx), acc)
