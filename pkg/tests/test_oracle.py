"""Brute-force oracles: triangular solves, the recursion, pointwise checks."""

import pathlib

import pytest

from qconnect import (
    NonMonicInput,
    QContext,
    VariableMismatch,
    make_instance,
    oracle_connection,
    oracle_inversion,
    recursive_invert,
    scalar,
    verify_pointwise,
)
from qconnect.errors import DegenerateLeadingCoefficient
from qconnect.oracle import UNIT_CIRCLE_POINTS, integer_points
from qconnect.poly import linear_combination, to_monomial


@pytest.fixture
def ctx():
    return QContext("1/3", 8)


def test_connection_to_self_is_delta(ctx):
    inst = make_instance("little-q-jacobi", {"a": "1/3", "b": "1/5"}, ctx)
    assert oracle_connection(inst, inst, 4).is_delta()


def test_connection_to_monomial_gives_definition(ctx):
    inst = make_instance("little-q-jacobi", {"a": "1/3", "b": "1/5"}, ctx)
    mono = make_instance("monomial", {}, ctx)
    for n in range(5):
        cv = oracle_connection(inst, mono, n)
        assert tuple(cv.values) == tuple(inst.polynomial(n).coeffs)


def test_inversion_example(ctx):
    inst = make_instance("little-q-laguerre", {"a": "1/2"}, ctx)
    assert [v.literal() for v in oracle_inversion(inst, 1)] == ["5/6", "-5/6"]
    assert [v.literal() for v in oracle_inversion(inst, 0)] == ["1"]


def test_round_trip_property(ctx):
    for fid, b in (
        ("al-salam-carlitz-1", {"a": "-2/3"}),
        ("q-charlier", {"a": "2/3"}),
        ("big-q-jacobi", {"a": "1/3", "b": "1/5", "c": "2/7"}),
    ):
        inst = make_instance(fid, b, ctx)
        for n in range(6):
            cv = oracle_inversion(inst, n)
            rebuilt = linear_combination(
                (cv[m], inst.polynomial(m)) for m in range(n + 1)
            )
            assert rebuilt == to_monomial(inst.basis_element(n))


def test_variable_mismatch(ctx):
    x_family = make_instance("little-q-laguerre", {"a": "1/2"}, ctx)
    lattice = make_instance("q-charlier", {"a": "2/3"}, ctx)
    with pytest.raises(VariableMismatch):
        oracle_connection(x_family, lattice, 2)


def test_degenerate_target_is_refused(ctx):
    class Fake:
        pass

    inst = make_instance("little-q-laguerre", {"a": "1/2"}, ctx)
    from qconnect.oracle import _solve_triangular
    from qconnect.poly import Polynomial, monomial

    bad = [Polynomial(monomial(ctx), (scalar(1),)), Polynomial(monomial(ctx), (scalar(1),))]
    with pytest.raises(DegenerateLeadingCoefficient):
        _solve_triangular(bad, inst.polynomial(1), "oracle", "inversion")


def test_recursive_invert_examples():
    # P_n = B_n: everything is a delta
    cv = recursive_invert(lambda n, k: 1 if k == 0 else 0, 4)
    assert cv.is_delta()
    # P_n = B_n - B_{n-1}: telescoping gives all ones
    cv = recursive_invert(lambda n, k: 1 if k == 0 else (-1 if k == 1 else 0), 6)
    assert all(v == scalar(1) for v in cv)
    assert cv.provenance == "lemma2.2"


def test_recursive_invert_accepts_tables():
    table = [[1], [1, -1], [1, -1, 0]]
    cv = recursive_invert(table, 2)
    assert all(v == scalar(1) for v in cv)
    with pytest.raises(NonMonicInput):
        recursive_invert([[2]], 0)


def test_verify_pointwise_basics():
    pts = integer_points(3)
    r = verify_pointwise(lambda y: y * y, lambda y: y * y, pts)
    assert r.ok() and r.max_defect == scalar(0)
    r = verify_pointwise(lambda y: y, lambda y: y + 1, pts[:1])
    assert r.status == "mismatch" and r.max_defect == scalar(-1)
    with pytest.raises(ValueError):
        verify_pointwise(lambda y: y, lambda y: y, [])
    with pytest.raises(ValueError):
        verify_pointwise(lambda y: y, lambda y: y, [scalar(1), scalar(1)])


def test_pointwise_completeness(ctx):
    # match on n+1 distinct points of degree-n polynomials implies equality
    inst = make_instance("big-q-laguerre", {"a": "1/3", "b": "1/5"}, ctx)
    n = 4
    p = inst.polynomial(n)
    from qconnect.poly import poly_eval

    pts = integer_points(n + 1)
    r = verify_pointwise(
        lambda y: poly_eval(p, y),
        lambda y: poly_eval(to_monomial(p), y),
        pts,
    )
    assert r.ok()
    other = inst.polynomial(n - 1)
    r = verify_pointwise(
        lambda y: poly_eval(p, y), lambda y: poly_eval(other, y), pts
    )
    assert r.status == "mismatch"


def test_unit_circle_points_are_on_the_circle():
    assert len(UNIT_CIRCLE_POINTS) >= 11
    for z in UNIT_CIRCLE_POINTS:
        assert z * z.conjugate() == scalar(1)
    assert len({(z.re, z.im) for z in UNIT_CIRCLE_POINTS}) == len(UNIT_CIRCLE_POINTS)


def test_oracle_has_no_closed_form_dependency():
    source = pathlib.Path(__file__).resolve().parents[1] / "src/qconnect/oracle.py"
    imports = [
        line for line in source.read_text().splitlines()
        if line.startswith(("import ", "from "))
    ]
    assert not any("coeffs" in line for line in imports)
    assert "closed_form" not in source.read_text()
