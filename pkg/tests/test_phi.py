"""Terminating series evaluators."""

import logging

import pytest

from qconnect import (
    DenominatorVanishes,
    QContext,
    eval_hyp_scalar,
    eval_phi_poly,
    eval_phi_scalar,
    phi_spec,
    poly_eval,
    scalar,
)
from qconnect.phi import eval_hyp_poly, hyp_term, phi_term, term_coefficients


@pytest.fixture
def ctx():
    return QContext("1/3", 10)


def test_termination_index_zero_is_one(ctx):
    spec = phi_spec([ctx.qpow(0)], [], ctx, 0, explicit=True)
    assert eval_phi_scalar(spec, "17/5") == scalar(1)


def test_one_phi_zero_example():
    ctx = QContext("1/2", 6)
    spec = phi_spec([ctx.qpow(-1)], [], ctx, 1)
    # 1 + (1-q^-1)/(1-q) z = 1 - z/q
    assert eval_phi_scalar(spec, 1) == scalar(-1)


def test_little_q_laguerre_style_sum(ctx):
    # num (q^-1, 0), den (aq) with a=1/2, q=1/3, z=1/3 -> -1/5
    spec = phi_spec([3, 0], ["1/6"], ctx, 1)
    assert eval_phi_scalar(spec, "1/3") == scalar("-1/5")
    p = eval_phi_poly(spec, ctx.q)
    assert [c.literal() for c in p.coeffs] == ["1", "-6/5"]


def test_phi_poly_zero_scale(ctx):
    spec = phi_spec([ctx.qpow(-3), 0], ["1/6"], ctx, 3)
    p = eval_phi_poly(spec, 0)
    assert [c.literal() for c in p.coeffs] == ["1"]


def test_termination_forced_by_inverse_power(ctx):
    # one extra term beyond the termination index is exactly zero
    n = 4
    spec = phi_spec([ctx.qpow(-n), scalar("1/2")], [scalar("1/7")], ctx, n + 1, explicit=True)
    assert term_coefficients(spec, scalar("3/5"))[n + 1] == scalar(0)


def test_poly_scalar_consistency(ctx):
    spec = phi_spec([ctx.qpow(-4), "1/2"], ["1/7", "2/9"], ctx, 4)
    s = scalar("2/3")
    p = eval_phi_poly(spec, s)
    for y0 in ("0", "1", "-1/2", "7/5", "1/9"):
        assert poly_eval(p, y0) == eval_phi_scalar(spec, s * scalar(y0))


def test_zero_parameter_convention(ctx):
    # zero numerator slots contribute (0;q)_k = 1
    with_zeros = phi_spec([ctx.qpow(-3), 0, 0], ["1/5"], ctx, 3)
    coeffs = term_coefficients(with_zeros, scalar(1))
    spec = phi_spec([ctx.qpow(-3)], ["1/5"], ctx, 3)
    alt = term_coefficients(spec, scalar(1))
    # same Pochhammer content, different compensating power bookkeeping
    q = ctx.q
    for k, (a, b) in enumerate(zip(coeffs, alt)):
        sign = scalar(-1) if k % 2 else scalar(1)
        assert a == b * (sign * q ** (k * (k - 1) // 2)) ** -2


def test_from_scratch_matches_recurrence(ctx):
    spec = phi_spec([ctx.qpow(-5), "1/2", "-3/7"], ["1/7", "2/9"], ctx, 5)
    z = scalar("-4/9")
    assert eval_phi_scalar(spec, z) == eval_phi_scalar(spec, z, from_scratch=True)
    for k in range(6):
        assert phi_term(spec, k, z) == term_coefficients(spec, z)[k]


def test_denominator_vanishes(ctx):
    with pytest.raises(DenominatorVanishes):
        phi_spec([ctx.qpow(-3)], [ctx.qpow(-1)], ctx, 3)
    spec = phi_spec([ctx.qpow(-3)], [ctx.qpow(-5)], ctx, 3)  # vanishes later, fine
    eval_phi_scalar(spec, 1)


def test_early_vanishing_is_reported(ctx, caplog):
    # numerator q^-2 kills terms past k=2 although the index says 5
    spec = phi_spec([ctx.qpow(-5), ctx.qpow(-2)], ["1/7"], ctx, 5)
    with caplog.at_level(logging.INFO, logger="qconnect.phi"):
        p = eval_phi_poly(spec, ctx.q)
    assert p.degree == 2
    assert any("degree below" in r.message for r in caplog.records)


def test_requires_termination_witness(ctx):
    with pytest.raises(ValueError):
        phi_spec(["1/2"], [], ctx, 3)
    phi_spec(["1/2"], [], ctx, 3, explicit=True)


def test_hyp_examples():
    assert eval_hyp_scalar([0, 1], [2], 0, "9/7") == scalar(1)
    assert eval_hyp_scalar([-1], [], 1, 2) == scalar(-1)
    assert eval_hyp_scalar([-2, 1], [2], 2, 1) == scalar("1/3")


def test_hyp_chu_vandermonde():
    # 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
    from qconnect import rising_factorial

    b, c = scalar("3/2"), scalar("7/3")
    for n in range(7):
        lhs = eval_hyp_scalar([-n, b], [c], n, 1)
        rhs = rising_factorial(c - b, n) / rising_factorial(c, n)
        assert lhs == rhs


def test_hyp_poly_matches_scalar():
    ctx = QContext("1/2", 8)
    p = eval_hyp_poly([-3, "1/2"], ["5/3"], 3, 1, ctx)
    for x in ("0", "2", "-1/3"):
        assert poly_eval(p, x) == eval_hyp_scalar([-3, "1/2"], ["5/3"], 3, x)
    assert hyp_term([-3, "1/2"], ["5/3"], 2, 1) != scalar(0)


def test_hyp_denominator_vanishes():
    with pytest.raises(DenominatorVanishes):
        eval_hyp_scalar([-3], [-1], 3, 1)
