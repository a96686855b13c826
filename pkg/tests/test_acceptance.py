"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Every check is exact (zero tolerance) except the two floating q -> 1
convergence criteria, whose defect ratios must land in [5, 20].  Grids and
degree bounds are pinned here; nothing is deferred to later calibration.
"""

import time

import pytest

from qconnect import (
    CORRECTIONS,
    PreconditionViolated,
    QContext,
    closed_form_connection,
    closed_form_inversion,
    make_instance,
    oracle_connection,
    oracle_inversion,
)
from qconnect.coeffs import PRINTED_CONNECTIONS, PRINTED_INVERSIONS
from qconnect.verify import (
    SuiteOptions,
    suite_lemma22,
    suite_limits,
    suite_selfinverse,
    suite_table1,
    suite_table2,
    suite_theorem21,
)

SEED = 2024


def _announce(number, name, ok, elapsed, detail=""):
    status = "PASS" if ok else "FAIL"
    suffix = f" [{detail}]" if detail else ""
    print(f"ACCEPTANCE {number:02d} {name}: {status} ({elapsed:.1f}s){suffix}")
    assert ok, f"criterion {number}: {name}{suffix}"


def _failing(reports, prefix=""):
    return [
        r for r in reports
        if not r.ok() and r.identity_id.startswith(prefix)
    ]


@pytest.fixture(scope="module")
def inversion_phase():
    t0 = time.monotonic()
    reports = suite_theorem21(
        SuiteOptions(seed=SEED, sets=3),
        include_connections=False,
        include_classical=False,
    )
    return reports, time.monotonic() - t0


@pytest.fixture(scope="module")
def connection_phase():
    t0 = time.monotonic()
    reports = suite_theorem21(
        SuiteOptions(seed=SEED, sets=3),
        include_inversions=False,
        include_classical=False,
    )
    return reports, time.monotonic() - t0


@pytest.fixture(scope="module")
def table_phase():
    t0 = time.monotonic()
    reports = []
    for q in ("2/5", "3/7"):
        options = SuiteOptions(q=q, seed=SEED, sets=3, n_max=6, max_degree=10)
        reports += suite_table1(options) + suite_table2(options)
    return reports, time.monotonic() - t0


def test_criterion_01_generic_inversion(inversion_phase):
    reports, elapsed = inversion_phase
    slotted = [r for r in reports if r.identity_id.startswith("thm-invert-slotted")]
    bad = _failing(slotted)
    assert len(slotted) == 2 * 9 * 3 * 2  # q x (r,s) x sets x a-values
    _announce(1, "slotted inversion engine vs oracle, n <= 6", not bad and elapsed < 30,
              elapsed, bad[0].identity_id if bad else "")


def test_criterion_02_generic_connection(connection_phase):
    reports, elapsed = connection_phase
    slotted = [
        r for r in reports
        if r.identity_id.startswith("thm-connect-slotted")
        and not r.identity_id.endswith(":compose")
    ]
    bad = _failing(slotted)
    assert len(slotted) == 2 * 9 * 3 * 9 * 4  # q x (r,s) x sets x (l,h) x (a,c)
    _announce(2, "slotted connection engine vs oracle, n <= 5", not bad and elapsed < 60,
              elapsed, bad[0].identity_id if bad else "")


def test_criterion_03_slot_free_branch(inversion_phase, connection_phase):
    inv, t1 = inversion_phase
    conn, t2 = connection_phase
    bad = _failing(inv, "thm-invert-slotfree") + [
        r for r in conn
        if not r.ok()
        and r.identity_id.startswith("thm-connect-slotfree")
        and not r.identity_id.endswith(":compose")
    ]
    _announce(3, "slot-free branch vs oracle and slot-at-zero structure", not bad,
              t1 + t2, bad[0].identity_id if bad else "")


def test_criterion_04_classical_engines():
    t0 = time.monotonic()
    reports = suite_theorem21(
        SuiteOptions(seed=SEED, sets=3),
        include_inversions=False,
        include_connections=False,
        include_classical=True,
    )
    elapsed = time.monotonic() - t0
    bad = _failing(reports, "thm-classical")
    assert len(reports) == 9 * 3 * 2
    _announce(4, "classical engines vs rising-factorial oracle, n <= 6", not bad,
              elapsed, bad[0].identity_id if bad else "")


def test_criterion_05_recursive_inverter():
    t0 = time.monotonic()
    reports = suite_lemma22(SuiteOptions(seed=SEED, sets=3), n_top=10)
    elapsed = time.monotonic() - t0
    bad = _failing(reports)
    _announce(5, "recursion equals engine and its closed form, n <= 10", not bad,
              elapsed, bad[0].identity_id if bad else "")


def test_criterion_06_composition(connection_phase):
    reports, elapsed = connection_phase
    composed = [r for r in reports if r.identity_id.endswith(":compose")]
    bad = _failing(composed)
    assert composed
    _announce(6, "composition rule equals the direct connection engine", not bad,
              elapsed, bad[0].identity_id if bad else "")


def test_criterion_07_registry_rows(table_phase):
    reports, elapsed = table_phase
    rows = [
        r for r in reports
        if r.identity_id.startswith(("table1:", "table2:", "printed:"))
    ]
    bad = _failing(rows)
    ledger_ids = {c.evidence for c in CORRECTIONS}
    uncovered = [
        fid for fid in PRINTED_INVERSIONS if f"printed:invert:{fid}" not in ledger_ids
    ] + [
        fid for fid in PRINTED_CONNECTIONS if f"printed:connect:{fid}" not in ledger_ids
    ]
    ok = not bad and not uncovered and elapsed < 300
    _announce(7, "all registry rows vs oracle with ledger coverage", ok, elapsed,
              (bad[0].identity_id if bad else ", ".join(uncovered)))


def test_criterion_08_delta_property(table_phase):
    reports, elapsed = table_phase
    delta = [r for r in reports if r.identity_id.startswith("delta:")]
    bad = _failing(delta)
    assert len({r.identity_id.split(":")[1] for r in delta}) >= 35
    _announce(8, "self-connection is the Kronecker delta, n <= 6", not bad,
              elapsed, bad[0].identity_id if bad else "")


def test_criterion_09_self_inverse():
    t0 = time.monotonic()
    reports = suite_selfinverse(SuiteOptions(seed=SEED), n_top=8, draws=5)
    elapsed = time.monotonic() - t0
    bad = _failing(reports)
    assert len(reports) == 5
    _announce(9, "normalized family is self inverse, n_max = 8", not bad, elapsed,
              bad[0].identity_id if bad else "")


def test_criterion_10_q_to_1_limit():
    t0 = time.monotonic()
    reports = suite_limits(SuiteOptions(seed=SEED))
    elapsed = time.monotonic() - t0
    bad = _failing(reports, "limit-connection")
    _announce(10, "q -> 1 defect ratio in [5, 20] componentwise", not bad, elapsed,
              bad[0].identity_id if bad else "")


def test_criterion_11_pointwise_family(table_phase):
    reports, elapsed = table_phase
    rows = [
        r for r in reports
        if r.identity_id.startswith(
            ("table1:continuous-q-hermite", "printed:invert:continuous-q-hermite")
        )
    ]
    bad = _failing(rows)
    assert any("n=5" in r.identity_id for r in rows)
    _announce(11, "pointwise-only family verified at 2n+1 circle points", not bad,
              elapsed, bad[0].identity_id if bad else "")


def test_criterion_12_top_families():
    t0 = time.monotonic()
    ctx = QContext("2/5", 7)
    aw_src = make_instance(
        "askey-wilson", {"a": "1/3", "b": "1/5", "c": "2/7", "d": "3/4"}, ctx
    )
    aw_tgt = make_instance(
        "askey-wilson", {"a": "1/3", "b": "2/9", "c": "1/6", "d": "2/5"}, ctx
    )
    qr_src = make_instance(
        "q-racah", {"alpha": "1/3", "beta": "2/7", "gamma": "1/5", "delta": "3/4"}, ctx
    )
    qr_tgt = make_instance(
        "q-racah", {"alpha": "1/6", "beta": "3/8", "gamma": "1/4", "delta": "3/5"}, ctx
    )
    ok = True
    for n in range(6):
        for inst in (aw_src, aw_tgt, qr_src, qr_tgt):
            if tuple(closed_form_inversion(inst, n).values) != tuple(
                oracle_inversion(inst, n).values
            ):
                ok = False
        for s, t in ((aw_src, aw_tgt), (qr_src, qr_tgt)):
            if tuple(closed_form_connection(s, t, n).values) != tuple(
                oracle_connection(s, t, n).values
            ):
                ok = False
    bad_target = make_instance(
        "q-racah", {"alpha": "1/6", "beta": "3/8", "gamma": "1/4", "delta": "3/4"}, ctx
    )
    try:
        closed_form_connection(qr_src, bad_target, 2)
        ok = False
    except PreconditionViolated:
        pass
    _announce(12, "top-family rows exact, constraint violations rejected", ok,
              time.monotonic() - t0)
