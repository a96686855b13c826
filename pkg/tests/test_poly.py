"""Polynomial layer: tagged bases, exact conversion, evaluation."""

import pytest

from qconnect import (
    MixedContexts,
    Polynomial,
    QContext,
    basis_element,
    linear_combination,
    poly_eval,
    qpochhammer,
    scalar,
    to_monomial,
)
from qconnect.poly import (
    imaginary_shifted,
    monomial,
    paired_product,
    q_shifted,
    shifted_nodes,
)


@pytest.fixture
def ctx():
    return QContext("1/3", 10)


def coeffs(p):
    return [c.literal() for c in p.coeffs]


def test_basis_element_examples(ctx):
    assert coeffs(basis_element(q_shifted(ctx), 1)) == ["1", "-1"]
    assert coeffs(basis_element(paired_product(ctx, 1, 0), 1)) == ["1", "-1"]
    assert coeffs(basis_element(shifted_nodes(ctx), 2)) == ["1/3", "-4/3", "1"]
    assert coeffs(basis_element(monomial(ctx), 3)) == ["0", "0", "0", "1"]


def test_element_zero_is_one(ctx):
    for b in (monomial(ctx), q_shifted(ctx), shifted_nodes(ctx),
              imaginary_shifted(ctx), paired_product(ctx, "1/2", "1/4")):
        assert coeffs(basis_element(b, 0)) == ["1"]


def test_degree_is_exact(ctx):
    for b in (monomial(ctx), q_shifted(ctx), shifted_nodes(ctx),
              imaginary_shifted(ctx), paired_product(ctx, "1/2", "1/4")):
        for n in range(11):
            assert basis_element(b, n).degree == n


def test_to_monomial_examples(ctx):
    p = Polynomial(monomial(ctx), (scalar(2), scalar(3)))
    assert to_monomial(p) is p
    p = Polynomial(q_shifted(ctx), (scalar(0), scalar(1)))
    assert coeffs(to_monomial(p)) == ["1", "-1"]
    p = Polynomial(q_shifted(ctx), (scalar(1), scalar(1)))
    assert coeffs(to_monomial(p)) == ["2", "-1"]


def test_poly_eval_examples(ctx):
    zero = Polynomial(monomial(ctx), ())
    assert poly_eval(zero, "5/7") == scalar(0)
    p = Polynomial(monomial(ctx), (scalar(1), scalar(-1)))
    assert poly_eval(p, 1) == scalar(0)
    e2 = Polynomial(q_shifted(ctx), (scalar(0), scalar(0), scalar(1)))
    assert poly_eval(e2, 2) == scalar("-1/3")  # (1-2)(1-2/3)


def test_eval_agrees_with_monomial_expansion(ctx):
    points = [scalar(x) for x in ("0", "1", "-2/3", "5/7", "3")]
    for b in (q_shifted(ctx), shifted_nodes(ctx), imaginary_shifted(ctx),
              paired_product(ctx, "1/2", "-2/7")):
        p = Polynomial(b, tuple(scalar(f"{k + 1}/3") for k in range(5)))
        mono = to_monomial(p)
        for y in points:
            assert poly_eval(p, y) == poly_eval(mono, y)


def test_paired_product_identity(ctx):
    # prod_j (1 - 2 a q^j x0 + a^2 q^{2j}) is the paired element at y = 2 x0
    a = scalar("2/7")
    x0 = scalar("3/5")
    q = ctx.q
    for n in range(8):
        product = scalar(1)
        for j in range(n):
            product = product * (
                scalar(1) - 2 * a * q**j * x0 + a * a * q ** (2 * j)
            )
        element = basis_element(paired_product(ctx, a, a * a), n)
        assert poly_eval(element, 2 * x0) == product


def test_q_shifted_vanishes_at_inverse_powers(ctx):
    q = ctx.q
    for n in range(1, 7):
        e = basis_element(q_shifted(ctx), n)
        for k in range(n):
            assert poly_eval(e, q**-k) == scalar(0)
        assert poly_eval(e, q**-n) != scalar(0)


def test_linear_combination(ctx):
    p = Polynomial(q_shifted(ctx), (scalar(1), scalar("1/2")))
    assert linear_combination([(1, p)]) == to_monomial(p)
    assert linear_combination([(1, p), (-1, p)]).is_zero()
    two = Polynomial(monomial(ctx), (scalar(1),))
    x = Polynomial(monomial(ctx), (scalar(0), scalar(1)))
    assert coeffs(linear_combination([(2, two), (3, x)])) == ["2", "3"]


def test_linear_combination_rejects_mixed_contexts(ctx):
    other = QContext("2/5", 10)
    p = Polynomial(monomial(ctx), (scalar(1),))
    r = Polynomial(monomial(other), (scalar(1),))
    with pytest.raises(MixedContexts):
        linear_combination([(1, p), (1, r)])


def test_trailing_zeros_are_stripped(ctx):
    p = Polynomial(monomial(ctx), (scalar(1), scalar(0), scalar(0)))
    assert p.degree == 0
    assert Polynomial(monomial(ctx), (scalar(0),)).is_zero()


def test_paired_product_needs_nonzero_alpha(ctx):
    with pytest.raises(ValueError):
        paired_product(ctx, 0, "1/4")


def test_pochhammer_consistency(ctx):
    # the q-shifted element evaluates to the kernel product
    y = scalar("4/7")
    for n in range(7):
        e = basis_element(q_shifted(ctx), n)
        assert poly_eval(e, y) == qpochhammer(y, ctx.q, n)
