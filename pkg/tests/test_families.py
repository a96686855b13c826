"""Family registry: declared ids, bindings, polynomials, bases."""

import pytest

from qconnect import (
    BindingError,
    DegenerateLeadingCoefficient,
    PreconditionViolated,
    QContext,
    UnknownFamily,
    family_basis_element,
    family_polynomial,
    make_instance,
    registry_ids,
    registry_lookup,
    scalar,
)
from qconnect.families import continuous_q_hermite_value
from qconnect.poly import poly_eval, to_monomial

REQUIRED_IDS = [
    "askey-wilson", "q-racah", "continuous-dual-q-hahn", "continuous-q-hahn",
    "big-q-jacobi", "q-hahn", "dual-q-hahn", "al-salam-chihara",
    "q-meixner-pollaczek", "continuous-q-jacobi", "continuous-q-ultraspherical",
    "continuous-q-legendre", "big-q-laguerre", "little-q-jacobi",
    "little-q-legendre", "q-meixner", "quantum-q-krawtchouk", "q-krawtchouk",
    "affine-q-krawtchouk", "dual-q-krawtchouk", "continuous-big-q-hermite",
    "continuous-q-laguerre", "little-q-laguerre", "q-laguerre",
    "alternative-q-charlier", "q-charlier", "al-salam-carlitz-1",
    "al-salam-carlitz-2", "continuous-q-hermite", "stieltjes-wigert",
    "discrete-q-hermite-1", "discrete-q-hermite-2", "d-little-q-laguerre",
    "d-q-meixner", "d-big-q-laguerre", "d-q-laguerre", "generic-q",
    "generic-q-a", "generic-hyp", "generic-hyp-lambda",
]


@pytest.fixture
def ctx():
    return QContext("1/3", 8)


def test_registry_contains_required_ids():
    ids = set(registry_ids())
    missing = [fid for fid in REQUIRED_IDS if fid not in ids]
    assert not missing


def test_registry_lookup_examples():
    assert registry_lookup("askey-wilson").parameters == ("a", "b", "c", "d")
    assert registry_lookup("d-q-laguerre").parameters == ("b*",)
    with pytest.raises(UnknownFamily):
        registry_lookup("no-such-family")


def test_family_polynomial_degree_zero(ctx):
    inst = make_instance("big-q-jacobi", {"a": "1/3", "b": "1/5", "c": "2/7"}, ctx)
    assert [c.literal() for c in family_polynomial(inst, 0).coeffs] == ["1"]


def test_little_q_laguerre_polynomial(ctx):
    inst = make_instance("little-q-laguerre", {"a": "1/2"}, ctx)
    assert [c.literal() for c in family_polynomial(inst, 1).coeffs] == ["1", "-6/5"]


def test_basis_examples(ctx):
    inst = make_instance("q-meixner", {"b": "1/3", "c": "4/7"}, ctx)
    assert [c.literal() for c in to_monomial(family_basis_element(inst, 1)).coeffs] == ["1", "-1"]
    asc = make_instance("al-salam-carlitz-1", {"a": "-2/3"}, ctx)
    assert [c.literal() for c in to_monomial(family_basis_element(asc, 2)).coeffs] == [
        "1/3", "-4/3", "1",
    ]
    # paired factor 1 - y + gamma*delta*q
    racah = make_instance(
        "q-racah",
        {"alpha": "1/3", "beta": "2/7", "gamma": "3/5", "delta": "1/1"},
        QContext("1/3", 8),
    )
    assert [c.literal() for c in to_monomial(family_basis_element(racah, 1)).coeffs] == [
        "6/5", "-1",
    ]


def test_triangularity(ctx):
    inst = make_instance("askey-wilson",
                         {"a": "1/3", "b": "1/5", "c": "2/7", "d": "3/4"},
                         QContext("2/5", 8))
    for n in range(7):
        p = family_polynomial(inst, n)
        assert p.degree == n
        assert inst.definition_coeffs(n)[n] != scalar(0)


def test_generic_class_from_definition(ctx):
    # the registered generic family reproduces a by-hand series summation
    from qconnect.scalar import qpochhammer

    q = ctx.q
    a1, b1 = scalar("1/2"), scalar("2/7")
    inst = make_instance("generic-q", {"a1": a1, "b1": b1}, ctx)
    n = 4
    p = family_polynomial(inst, n)
    x = scalar("3/5")
    total = scalar(0)
    for k in range(n + 1):
        term = (
            qpochhammer(q**-n, q, k)
            * qpochhammer(a1, q, k)
            / (qpochhammer(b1, q, k) * ctx.qq(k))
            * (q * x) ** k
        )
        total = total + term
    assert poly_eval(p, x) == total


def test_generic_slotted_from_definition(ctx):
    from qconnect.scalar import qpochhammer

    q = ctx.q
    a, b1 = scalar("1/7"), scalar("2/7")
    inst = make_instance("generic-q-a", {"a": a, "b1": b1}, ctx)
    n = 3
    x = scalar("-2/5")
    total = scalar(0)
    for k in range(n + 1):
        sign = scalar(-1) if k % 2 else scalar(1)
        term = (
            qpochhammer(q**-n, q, k)
            * qpochhammer(a * q**n, q, k)
            / (qpochhammer(b1, q, k) * ctx.qq(k))
            * (sign * q ** (k * (k - 1) // 2)) ** (1 + 1 - 2)
            * (q * x) ** k
        )
        total = total + term
    assert poly_eval(family_polynomial(inst, n), x) == total


def test_d_family_zero_padding_matches_generic(ctx):
    d_inst = make_instance(
        "d-little-q-laguerre", {"d": 2, "b1": "1/5", "b2": "2/7"}, ctx
    )
    g_inst = make_instance(
        "generic-q", {"a1": 0, "a2": 0, "b1": "1/5", "b2": "2/7"}, ctx
    )
    for n in range(7):
        assert family_polynomial(d_inst, n) == family_polynomial(g_inst, n)


def test_constraint_enforcement():
    ctx = QContext("2/5", 6)
    with pytest.raises(PreconditionViolated):
        make_instance("continuous-q-jacobi",
                      {"a2": "1/3", "b2": "2/5", "sq": "1/2"}, ctx)
    ok = make_instance("continuous-q-jacobi",
                       {"a2": "1/3", "b2": "2/5", "sq": "2/3"}, QContext("4/9", 6))
    assert ok.spec.id == "continuous-q-jacobi"


def test_finite_support_is_advisory_only():
    # binding qN to something that is no q-power is allowed
    ctx = QContext("2/5", 6)
    inst = make_instance("q-hahn", {"alpha": "1/3", "beta": "2/7", "qN": "7/2"}, ctx)
    assert inst.spec.finite_support_note
    assert family_polynomial(inst, 4).degree == 4


def test_degenerate_binding_rejected():
    ctx = QContext("2/5", 6)
    # denominator parameter hits q^-2 within the degree range
    with pytest.raises(DegenerateLeadingCoefficient):
        make_instance("little-q-laguerre", {"a": scalar("2/5") ** -3}, ctx)
    with pytest.raises(DegenerateLeadingCoefficient):
        make_instance("askey-wilson",
                      {"a": 0, "b": "1/5", "c": "2/7", "d": "3/4"}, ctx)


def test_binding_validation(ctx):
    with pytest.raises(BindingError):
        make_instance("little-q-laguerre", {"a": "1/2", "zzz": 1}, ctx)
    with pytest.raises(BindingError):
        make_instance("little-q-laguerre", {}, ctx)
    with pytest.raises(BindingError):
        make_instance("d-q-laguerre", {"b1": "1/3", "b3": "1/5"}, ctx)


def test_monomial_pseudo_family(ctx):
    inst = make_instance("monomial", {}, ctx)
    assert [c.literal() for c in family_polynomial(inst, 3).coeffs] == ["0", "0", "0", "1"]


def test_continuous_q_hermite_values(ctx):
    # H_0 = 1, H_1 = z + 1/z at any circle point
    z = scalar("3/5") + scalar("4/5") * scalar("0+1i")
    assert continuous_q_hermite_value(ctx, 0, z) == scalar(1)
    assert continuous_q_hermite_value(ctx, 1, z) == z + 1 / z
    spec = registry_lookup("continuous-q-hermite")
    assert not spec.expansion_capable


def test_instances_are_shareable_across_threads():
    # caches fill idempotently, so concurrent readers agree exactly
    import threading

    ctx = QContext("2/5", 8)
    inst = make_instance(
        "askey-wilson", {"a": "1/3", "b": "1/5", "c": "2/7", "d": "3/4"}, ctx
    )
    results = [None] * 8
    def worker(i):
        results[i] = [family_polynomial(inst, n) for n in range(7)]
    threads = [threading.Thread(target=worker, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for got in results[1:]:
        assert got == results[0]
    for n, p in enumerate(results[0]):
        assert p.degree == n
