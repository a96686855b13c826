"""Terminating basic hypergeometric and generalized hypergeometric sums.

Both evaluators are exact and refuse non-terminating input: the caller must
supply a termination index, and the series is summed for k = 0..n only.
Successive terms are produced by a multiplicative update; a from-scratch
recomputation of each term is available behind a flag for verification.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

from .errors import DenominatorVanishes
from .poly import Polynomial, monomial
from .scalar import (
    GaussScalar,
    ONE,
    QContext,
    ZERO,
    qpochhammer_multi,
    rising_factorial,
    scalar,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PhiSpec:
    """A terminating series with numerator/denominator parameter lists.

    The sum runs over k = 0..termination_index.  Either some numerator
    parameter equals q^{-n} exactly (which makes every later term vanish),
    or the caller supplies the index explicitly, as zero-padded numerator
    lists require.  No denominator parameter may equal q^{-j} for j below
    the termination index; that is checked eagerly.
    """

    num: tuple[GaussScalar, ...]
    den: tuple[GaussScalar, ...]
    ctx: QContext
    termination_index: int
    _explicit: bool = field(default=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "num", tuple(scalar(a) for a in self.num))
        object.__setattr__(self, "den", tuple(scalar(b) for b in self.den))
        n = self.termination_index
        if n < 0:
            raise ValueError("termination_index must be non-negative")
        self.ctx.check_degree(n)
        qinv_powers = [self.ctx.qpow(-j) for j in range(n)]
        for i, b in enumerate(self.den):
            for j, qij in enumerate(qinv_powers):
                if b == qij:
                    raise DenominatorVanishes(j + 1, f"denominator parameter {i} equals q^-{j}")
        if not self._explicit and self.ctx.qpow(-n) not in self.num:
            raise ValueError(
                "no numerator parameter equals q^-termination_index; "
                "pass explicit=True to force the truncation"
            )

    @property
    def exponent(self) -> int:
        """Power of the alternating compensating factor: 1 + s - r."""
        return 1 + len(self.den) - len(self.num)


def phi_spec(num, den, ctx: QContext, termination_index: int, explicit: bool = False) -> PhiSpec:
    """Build a PhiSpec, coercing parameters to scalars."""
    return PhiSpec(tuple(num), tuple(den), ctx, termination_index, explicit)


def phi_term(spec: PhiSpec, k: int, z) -> GaussScalar:
    """Term k computed from scratch (independent of the running update)."""
    z = scalar(z)
    q = spec.ctx.q
    num = qpochhammer_multi(spec.num, q, k)
    den = qpochhammer_multi(spec.den, q, k) * spec.ctx.qq(k)
    if not den:
        raise DenominatorVanishes(k, "denominator q-Pochhammer")
    sign = -ONE if k % 2 else ONE
    comp = (sign * spec.ctx.qpow(k * (k - 1) // 2)) ** spec.exponent
    return num / den * comp * z**k


def _phi_coefficients(spec: PhiSpec, z: GaussScalar, from_scratch: bool) -> list[GaussScalar]:
    """Terms t_0..t_n of the series at argument z.

    The update from t_k to t_{k+1} multiplies by the exact one-step ratio.
    An early-vanishing numerator truncates the tail to zeros; that is legal
    and logged.
    """
    n = spec.termination_index
    e = spec.exponent
    ctx = spec.ctx
    terms = [ONE]
    t = ONE
    for k in range(n):
        if from_scratch:
            t = phi_term(spec, k + 1, z)
            terms.append(t)
            continue
        qk = ctx.qpow(k)
        ratio = z
        for a in spec.num:
            ratio = ratio * (ONE - a * qk)
        if not ratio:
            log.debug("numerator vanished at k=%d; remaining terms are zero", k + 1)
            terms.extend([ZERO] * (n - k))
            break
        for i, b in enumerate(spec.den):
            factor = ONE - b * qk
            if not factor:
                raise DenominatorVanishes(k + 1, f"denominator parameter {i}")
            ratio = ratio / factor
        ratio = ratio / (ONE - ctx.qpow(k + 1))
        if e:
            ratio = ratio * (-qk) ** e
        t = t * ratio
        terms.append(t)
    return terms


def term_coefficients(spec: PhiSpec, z, from_scratch: bool = False) -> tuple[GaussScalar, ...]:
    """All terms t_0..t_n at argument z, without summing or stripping."""
    return tuple(_phi_coefficients(spec, scalar(z), from_scratch))


def hyp_term_coefficients(num, den, termination_index: int, z) -> tuple[GaussScalar, ...]:
    """All terms of the generalized hypergeometric sum, unsummed."""
    return tuple(_hyp_coefficients(num, den, termination_index, scalar(z)))


def eval_phi_scalar(spec: PhiSpec, z, from_scratch: bool = False) -> GaussScalar:
    """The terminating sum at scalar argument z, exactly."""
    z = scalar(z)
    total = ZERO
    for t in _phi_coefficients(spec, z, from_scratch):
        total = total + t
    return total


def eval_phi_poly(spec: PhiSpec, arg_scale, from_scratch: bool = False) -> Polynomial:
    """The series as a polynomial in y, with argument z = arg_scale * y.

    Coefficient k is term k with z^k replaced by arg_scale^k.  Evaluating
    the result at y0 agrees exactly with eval_phi_scalar at arg_scale*y0.
    Degree falls short of the termination index only when a numerator
    parameter vanishes early; that is logged, not silently accepted.
    """
    arg_scale = scalar(arg_scale)
    coeffs = _phi_coefficients(spec, arg_scale, from_scratch)
    if arg_scale and not coeffs[-1]:
        log.info(
            "series polynomial has degree below its termination index %d",
            spec.termination_index,
        )
    return Polynomial(monomial(spec.ctx), tuple(coeffs))


def _hyp_coefficients(num, den, n: int, z: GaussScalar) -> list[GaussScalar]:
    num = [scalar(a) for a in num]
    den = [scalar(b) for b in den]
    terms = [ONE]
    t = ONE
    for k in range(n):
        ratio = z
        for a in num:
            ratio = ratio * (a + k)
        if not ratio:
            terms.extend([ZERO] * (n - k))
            break
        for i, b in enumerate(den):
            factor = b + k
            if not factor:
                raise DenominatorVanishes(k + 1, f"denominator parameter {i}")
            ratio = ratio / factor
        t = t * ratio / (k + 1)
        terms.append(t)
    return terms


def eval_hyp_scalar(num, den, termination_index: int, z) -> GaussScalar:
    """Terminating generalized hypergeometric sum with rising factorials.

    Σ_{k<=n} Π(num)_k / (Π(den)_k k!) z^k, exactly.  Some numerator
    parameter should be -n (or the index is an explicit truncation).
    """
    total = ZERO
    for t in _hyp_coefficients(num, den, termination_index, scalar(z)):
        total = total + t
    return total


def eval_hyp_poly(num, den, termination_index: int, arg_scale, ctx: QContext) -> Polynomial:
    """The generalized hypergeometric sum as a polynomial in y."""
    coeffs = _hyp_coefficients(num, den, termination_index, scalar(arg_scale))
    return Polynomial(monomial(ctx), tuple(coeffs))


def hyp_term(num, den, k: int, z) -> GaussScalar:
    """From-scratch term k of the generalized hypergeometric sum."""
    z = scalar(z)
    numerator = ONE
    for a in num:
        numerator = numerator * rising_factorial(a, k)
    denominator = GaussScalar(math.factorial(k))
    for b in den:
        denominator = denominator * rising_factorial(b, k)
    if not denominator:
        raise DenominatorVanishes(k, "denominator rising factorial")
    return numerator / denominator * z**k
