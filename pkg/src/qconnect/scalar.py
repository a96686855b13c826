"""Exact Gaussian-rational scalars and the q-kernels built on them.

Every quantity in this package is a complex number with exact rational real
and imaginary parts.  Components are kept in lowest terms with positive
denominators by the rational backend (gmpy2.mpq when available, else
fractions.Fraction), so equality is plain component-wise comparison and is
decidable.  All operations are pure; values are immutable after construction.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction

from .errors import ContextDegreeExceeded, InvalidContext, ScalarParseError

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    Rational = Fraction

_R0 = Rational(0)
_R1 = Rational(1)


def _as_rational(x) -> Rational:
    if isinstance(x, (int, Fraction)) or type(x) is type(_R0):
        return Rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class GaussScalar:
    """An exact complex number re + im*i with rational components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _as_rational(re)
        self.im = _as_rational(im)

    @classmethod
    def _raw(cls, re, im) -> "GaussScalar":
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    # -- predicates ------------------------------------------------------

    def is_real(self) -> bool:
        return not self.im

    def is_integer(self) -> bool:
        return not self.im and self.re.denominator == 1

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussScalar._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussScalar._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussScalar._raw(o.re - self.re, o.im - self.im)

    def __neg__(self):
        return GaussScalar._raw(-self.re, -self.im)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return GaussScalar._raw(self.re * o.re, _R0)
        return GaussScalar._raw(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not o.re and not o.im:
            raise ZeroDivisionError("division by zero scalar")
        if not self.im and not o.im:
            return GaussScalar._raw(self.re / o.re, _R0)
        norm = o.re * o.re + o.im * o.im
        return GaussScalar._raw(
            (self.re * o.re + self.im * o.im) / norm,
            (self.im * o.re - self.re * o.im) / norm,
        )

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (ONE / self) ** (-exponent)
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "GaussScalar":
        return GaussScalar._raw(self.re, -self.im)

    def inverse(self) -> "GaussScalar":
        return ONE / self

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- formatting ------------------------------------------------------

    def literal(self) -> str:
        """Serialize in the exact literal grammar (never a float)."""
        if not self.im:
            return _rat_literal(self.re)
        if not self.re:
            return _rat_literal(self.im) + "i"
        im = _rat_literal(self.im)
        sep = "" if im.startswith("-") else "+"
        return _rat_literal(self.re) + sep + im + "i"

    def __repr__(self):
        return f"GaussScalar({self.literal()!r})"

    def __str__(self):
        return self.literal()

    def __float__(self):
        if self.im:
            raise ValueError("cannot convert a non-real scalar to float")
        return float(self.re)

    def __complex__(self):
        return complex(float(self.re), float(self.im))


def _coerce(x):
    if isinstance(x, GaussScalar):
        return x
    if isinstance(x, (int, Fraction)) or type(x) is type(_R0):
        return GaussScalar._raw(Rational(x), _R0)
    return None


def _rat_literal(r) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


ZERO = GaussScalar(0)
ONE = GaussScalar(1)
I = GaussScalar(0, 1)


def scalar(x) -> GaussScalar:
    """Coerce an int, rational, literal string, or scalar to GaussScalar."""
    if isinstance(x, str):
        return parse_scalar(x)
    c = _coerce(x)
    if c is None:
        raise TypeError(f"cannot interpret {x!r} as a scalar")
    return c


_RAT = r"-?\d+(?:/\d+)?"
_SCALAR_RE = _re.compile(
    rf"^(?:(?P<re>{_RAT})(?P<im>[+-]\d+(?:/\d+)?)i|(?P<imonly>{_RAT})i|(?P<reonly>{_RAT}))$"
)


def parse_scalar(text: str) -> GaussScalar:
    """Parse the rational/Gaussian literal grammar.

    Accepted forms (no spaces): ``d``, ``-d/d``, ``<rat>i``, ``<rat>+<rat>i``,
    ``<rat>-<rat>i``.  Rejects zero denominators and anything else.
    """
    m = _SCALAR_RE.match(text)
    if not m:
        pos = _first_bad_position(text)
        raise ScalarParseError(text, pos, "does not match the scalar grammar")
    try:
        if m.group("reonly") is not None:
            return GaussScalar(_parse_rat(text, m.group("reonly")))
        if m.group("imonly") is not None:
            return GaussScalar(0, _parse_rat(text, m.group("imonly")))
        return GaussScalar(
            _parse_rat(text, m.group("re")), _parse_rat(text, m.group("im"))
        )
    except ZeroDivisionError:
        raise ScalarParseError(text, text.index("/0") + 1, "zero denominator") from None


def _parse_rat(text: str, part: str) -> Rational:
    if part.startswith("+"):
        part = part[1:]
    if "/" in part:
        num, den = part.split("/")
        if int(den) == 0:
            raise ZeroDivisionError
        return Rational(int(num), int(den))
    return Rational(int(part))


def _first_bad_position(text: str) -> int:
    for i, ch in enumerate(text):
        if ch not in "0123456789/+-i":
            return i
    return len(text)


class QContext:
    """The base q together with cached q-factorials (q;q)_k.

    Construction validates that (q;q)_k is nonzero for every k up to
    max_degree, which excludes q = 0 and every root of unity that would be
    reached within the working degree range.  The cache is eager, so a
    context can be shared freely across threads.
    """

    def __init__(self, q, max_degree: int = 16):
        self.q = scalar(q)
        if not self.q:
            raise InvalidContext("q must be nonzero")
        self.max_degree = int(max_degree)
        if self.max_degree < 0:
            raise InvalidContext("max_degree must be non-negative")
        cache = [ONE]
        power = ONE
        value = ONE
        for k in range(1, self.max_degree + 1):
            power = power * self.q
            value = value * (ONE - power)
            if not value:
                raise InvalidContext(
                    f"(q;q)_{k} vanishes for q = {self.q.literal()}; "
                    "q may not be 1 or a root of unity within the degree range"
                )
            cache.append(value)
        self.qq_cache = tuple(cache)
        self._powers = {0: ONE, 1: self.q}

    def qq(self, k: int) -> GaussScalar:
        """(q;q)_k from the cache."""
        if k < 0 or k > self.max_degree:
            raise ContextDegreeExceeded(f"(q;q)_{k} outside degree range 0..{self.max_degree}")
        return self.qq_cache[k]

    def qpow(self, e: int) -> GaussScalar:
        """q**e for any integer e, memoized.

        The memo is filled lazily; writes are idempotent, so concurrent use
        is safe under the interpreter lock.
        """
        value = self._powers.get(e)
        if value is None:
            value = self.q ** e
            self._powers[e] = value
        return value

    def check_degree(self, n: int) -> None:
        if n > self.max_degree:
            raise ContextDegreeExceeded(
                f"degree {n} exceeds context max_degree {self.max_degree}"
            )

    def __repr__(self):
        return f"QContext(q={self.q.literal()!r}, max_degree={self.max_degree})"


def qpochhammer(a, q, n: int) -> GaussScalar:
    """(a;q)_n = prod_{k<n} (1 - a q^k); the empty product is 1."""
    a = scalar(a)
    q = scalar(q)
    result = ONE
    aq = a
    for _ in range(n):
        result = result * (ONE - aq)
        if not result:
            return ZERO
        aq = aq * q
    return result


def qpochhammer_multi(params, q, k: int) -> GaussScalar:
    """Product of (a;q)_k over a parameter list; empty list gives 1."""
    result = ONE
    for a in params:
        result = result * qpochhammer(a, q, k)
        if not result:
            return ZERO
    return result


def qbinomial(n: int, m: int, ctx: QContext) -> GaussScalar:
    """The q-binomial coefficient (q;q)_n / ((q;q)_m (q;q)_{n-m})."""
    ctx.check_degree(n)
    if m < 0 or m > n:
        return ZERO
    return ctx.qq(n) / (ctx.qq(m) * ctx.qq(n - m))


def rising_factorial(a, n: int) -> GaussScalar:
    """(a)_n = a (a+1) ... (a+n-1); the empty product is 1."""
    a = scalar(a)
    result = ONE
    for k in range(n):
        result = result * (a + k)
        if not result:
            return ZERO
    return result


def qpochhammer_negpow(n: int, m: int, ctx: QContext) -> GaussScalar:
    """(q^{-n};q)_m in closed form: (-1)^m (q;q)_n / (q;q)_{n-m} * q^{m(m-1)/2 - nm}.

    Returns 0 for m > n.  Always equals qpochhammer(q**-n, q, m).
    """
    ctx.check_degree(n)
    if m > n:
        return ZERO
    sign = -ONE if m % 2 else ONE
    return sign * ctx.qq(n) / ctx.qq(n - m) * ctx.qpow(m * (m - 1) // 2 - n * m)
