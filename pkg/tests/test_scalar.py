"""Scalar layer: Gaussian rationals, literals, q-kernels."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qconnect import (
    GaussScalar,
    InvalidContext,
    QContext,
    ScalarParseError,
    parse_scalar,
    qbinomial,
    qpochhammer,
    qpochhammer_multi,
    qpochhammer_negpow,
    rising_factorial,
    scalar,
)
from qconnect.errors import ContextDegreeExceeded

rationals = st.fractions(
    min_value=Fraction(-8), max_value=Fraction(8), max_denominator=16
)


def test_qpochhammer_examples():
    assert qpochhammer("7/3", "2/5", 0) == scalar(1)
    assert qpochhammer("1/2", "1/3", 2) == scalar("5/12")
    q = scalar("2/5")
    assert qpochhammer(q**-2, q, 3) == scalar(0)


def test_qpochhammer_multi_examples():
    assert qpochhammer_multi([], "1/3", 5) == scalar(1)
    assert qpochhammer_multi(["1/2"], "1/3", 2) == scalar("5/12")
    assert qpochhammer_multi([0, 0], "1/3", 4) == scalar(1)


def test_qbinomial_examples():
    ctx = QContext("1/2", 6)
    assert qbinomial(5, 0, ctx) == scalar(1)
    assert qbinomial(3, 1, ctx) == scalar("7/4")  # 1 + q + q^2
    assert qbinomial(3, 4, ctx) == scalar(0)
    assert qbinomial(3, -1, ctx) == scalar(0)
    with pytest.raises(ContextDegreeExceeded):
        qbinomial(7, 2, ctx)


def test_rising_factorial_examples():
    assert rising_factorial(9, 0) == scalar(1)
    assert rising_factorial(3, 2) == scalar(12)
    assert rising_factorial(-2, 3) == scalar(0)


def test_negpow_examples():
    ctx = QContext("1/3", 6)
    assert qpochhammer_negpow(4, 0, ctx) == scalar(1)
    assert qpochhammer_negpow(2, 3, ctx) == scalar(0)
    assert qpochhammer_negpow(2, 1, ctx) == qpochhammer(9, "1/3", 1) == scalar(-8)


@pytest.mark.parametrize("q", ["2/5", "3/7", "-1/2", "7/9", "5/8"])
def test_negpow_matches_product_form(q):
    ctx = QContext(q, 12)
    qs = scalar(q)
    for n in range(13):
        for m in range(n + 1):
            assert qpochhammer_negpow(n, m, ctx) == qpochhammer(qs**-n, qs, m)


def test_pochhammer_splitting_identity():
    # (a;q)_(m+n) = (a;q)_m (a q^m;q)_n
    q = scalar("2/5")
    for a in (scalar("1/3"), scalar("-5/7"), scalar(4)):
        for m in range(0, 13, 3):
            for n in range(0, 13 - m, 2):
                lhs = qpochhammer(a, q, m + n)
                rhs = qpochhammer(a, q, m) * qpochhammer(a * q**m, q, n)
                assert lhs == rhs


def test_pochhammer_shift_identity():
    # (aq;q)_n = (a;q)_n (1 - a q^n)/(1 - a) for a != 1
    q = scalar("3/7")
    for a in (scalar("1/3"), scalar("-2/5")):
        for n in range(9):
            lhs = qpochhammer(a * q, q, n)
            rhs = qpochhammer(a, q, n) * (scalar(1) - a * q**n) / (scalar(1) - a)
            assert lhs == rhs


def test_qbinomial_product_identity():
    ctx = QContext("2/5", 12)
    q = ctx.q
    for n in range(13):
        for m in range(n + 1):
            for k in range(n - m + 1):
                lhs = qbinomial(n, m, ctx) * qbinomial(n - m, k, ctx)
                rhs = (
                    qbinomial(n, k + m, ctx)
                    * qpochhammer(q ** (k + 1), q, m)
                    / ctx.qq(m)
                )
                assert lhs == rhs


def test_qbinomial_symmetry():
    ctx = QContext("3/7", 10)
    for n in range(11):
        for m in range(n + 1):
            assert qbinomial(n, m, ctx) == qbinomial(n, n - m, ctx)


def test_kernel_limit_ratio():
    # |(q^a;q)_k/(1-q)^k - (a)_k| shrinks linearly in 1-q
    for a in (1, 2, 4):
        k = 4
        exact = float(rising_factorial(a, k))
        defects = []
        for eps in (Fraction(1, 1000), Fraction(1, 10000)):
            q = scalar(Fraction(1) - eps)
            value = qpochhammer(q**a, q, k) / (scalar(1) - q) ** k
            defects.append(abs(float(value) - exact))
        assert 5 <= defects[0] / defects[1] <= 20


def test_context_rejects_bad_q():
    with pytest.raises(InvalidContext):
        QContext(0, 4)
    with pytest.raises(InvalidContext):
        QContext(1, 4)
    with pytest.raises(InvalidContext):
        QContext(-1, 4)  # (q;q)_2 = 0 at q = -1
    ctx = QContext(-1, 1)  # but fine if the degree range stays below it
    assert ctx.qq(1) == scalar(2)


def test_context_cache_matches_products():
    ctx = QContext("2/5", 10)
    for k in range(11):
        assert ctx.qq(k) == qpochhammer(ctx.q, ctx.q, k)


def test_scalar_literal_round_trip_examples():
    assert parse_scalar("2/5") == scalar(Fraction(2, 5))
    assert parse_scalar("-1/3+2/7i") == GaussScalar(Fraction(-1, 3), Fraction(2, 7))
    assert parse_scalar("3i") == GaussScalar(0, 3)
    assert parse_scalar("-2/7i") == GaussScalar(0, Fraction(-2, 7))
    with pytest.raises(ScalarParseError):
        parse_scalar("1/0")
    with pytest.raises(ScalarParseError):
        parse_scalar("1.5")
    with pytest.raises(ScalarParseError):
        parse_scalar("1 + 2i")


@given(re=rationals, im=rationals)
@settings(max_examples=200, deadline=None)
def test_literal_round_trip(re, im):
    s = GaussScalar(re, im)
    assert parse_scalar(s.literal()) == s


@given(a=rationals, b=rationals, c=rationals, d=rationals)
@settings(max_examples=100, deadline=None)
def test_field_arithmetic(a, b, c, d):
    x = GaussScalar(a, b)
    y = GaussScalar(c, d)
    assert x + y == y + x
    assert x * y == y * x
    assert x * (x + y) == x * x + x * y
    if y:
        assert (x / y) * y == x
    assert x - x == scalar(0)


def test_power_and_conjugate():
    z = GaussScalar(Fraction(3, 5), Fraction(4, 5))
    assert z * z.conjugate() == scalar(1)  # unit circle point
    assert z**0 == scalar(1)
    assert z**3 * z**-3 == scalar(1)
    assert (z**-2) == (scalar(1) / z) ** 2
