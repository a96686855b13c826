"""Command-line front end.

Verbs: invert, connect, verify, table, ledger.  All numeric output is an
exact scalar literal (never a float), documents carry a schema_version, and
identical requests with the same seed produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .coeffs import (
    CORRECTIONS,
    NOTATION_NOTES,
    closed_form_connection,
    closed_form_inversion,
)
from .errors import QConnectError, ScalarParseError
from .families import FamilyInstance, make_instance
from .oracle import oracle_connection, oracle_inversion
from .scalar import GaussScalar, QContext, parse_scalar
from .vectors import CoefficientVector
from .verify import SUITES, SuiteOptions, run_suite

SCHEMA_VERSION = "1"
DEFAULT_MAX_DEGREE = 16


def _max_degree() -> int:
    raw = os.environ.get("QPOLY_MAX_DEGREE", "")
    return int(raw) if raw else DEFAULT_MAX_DEGREE


def _parse_bindings(pairs: list[str]) -> dict[str, GaussScalar]:
    bindings = {}
    for pair in pairs:
        if "=" not in pair:
            raise ScalarParseError(pair, 0, "expected name=value")
        name, _, value = pair.partition("=")
        bindings[name.strip()] = parse_scalar(value.strip())
    return bindings


def _parse_family_ref(text: str) -> tuple[str, dict[str, GaussScalar]]:
    """Parse 'family-id:name=value,name=value' (bindings optional)."""
    fid, _, rest = text.partition(":")
    bindings = _parse_bindings(rest.split(",")) if rest else {}
    return fid, bindings


def _rows_from_vector(cv: CoefficientVector, n: int) -> list[dict]:
    return [
        {"n": n, "m": m, "value": cv[m].literal(), "provenance": cv.provenance}
        for m in range(n + 1)
    ]


def _emit(document: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(document, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_ALL)
    writer.writerow(["n", "m", "value", "provenance"])
    for row in document.get("rows", []):
        writer.writerow([row["n"], row["m"], row["value"], row["provenance"]])
    return buf.getvalue()


def _error_document(request: dict, exc: Exception) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "request": request,
        "error": {"type": type(exc).__name__, "message": str(exc)},
        "status": "error",
    }


def _instance(fid: str, bindings, q: GaussScalar, degree_needed: int) -> FamilyInstance:
    ctx = QContext(q, max(degree_needed, 0))
    return make_instance(fid, bindings, ctx)


def _report_dicts(reports) -> list[dict]:
    return [
        {
            "identity_id": r.identity_id,
            "status": r.status,
            "defect": r.max_defect.literal(),
            "witness": r.witness,
        }
        for r in reports
    ]


def _ledger_dicts() -> list[dict]:
    return [
        {
            "location": c.location,
            "printed_form": c.printed_form,
            "corrected_form": c.corrected_form,
            "evidence": c.evidence,
        }
        for c in CORRECTIONS
    ]


def _mismatch_reports(shipped_rows, printed_rows, scope: str) -> list[dict]:
    reports = []
    for srow, prow in zip(shipped_rows, printed_rows):
        if srow["value"] != prow["value"]:
            reports.append(
                {
                    "identity_id": f"printed-vs-shipped:{scope}",
                    "status": "mismatch",
                    "defect": "printed differs from shipped",
                    "witness": f"n={srow['n']} m={srow['m']}: "
                    f"shipped {srow['value']}, printed {prow['value']}",
                }
            )
    return reports


def _cmd_invert(args) -> tuple[dict, int]:
    q = parse_scalar(args.q)
    n_top = args.n if args.n is not None else args.n_max
    request = {
        "verb": "table" if args.n is None else "invert",
        "family": args.family,
        "params": {k: v.literal() for k, v in sorted(_parse_bindings(args.param).items())},
        "q": q.literal(),
        "n": n_top,
        "format": args.format,
        "oracle": args.oracle,
        "as_printed": args.as_printed,
    }
    if n_top > _max_degree():
        raise QConnectError(f"n={n_top} exceeds QPOLY_MAX_DEGREE={_max_degree()}")
    inst = _instance(args.family, _parse_bindings(args.param), q, n_top)
    ns = range(n_top + 1) if args.n is None else [args.n]
    rows, reports = [], []
    for n in ns:
        if args.oracle:
            cv = oracle_inversion(inst, n)
        else:
            cv = closed_form_inversion(inst, n, as_printed=args.as_printed)
        rows.extend(_rows_from_vector(cv, n))
        if args.as_printed and not args.oracle:
            shipped = closed_form_inversion(inst, n)
            reports.extend(
                _mismatch_reports(
                    _rows_from_vector(shipped, n), _rows_from_vector(cv, n), args.family
                )
            )
    document = {
        "schema_version": SCHEMA_VERSION,
        "request": request,
        "rows": rows,
        "reports": reports,
        "status": "ok",
    }
    return document, 0


def _cmd_connect(args) -> tuple[dict, int]:
    q = parse_scalar(args.q)
    src_id, src_bind = _parse_family_ref(getattr(args, "from"))
    tgt_id, tgt_bind = _parse_family_ref(args.to)
    n_top = args.n if args.n is not None else args.n_max
    request = {
        "verb": "table" if args.n is None else "connect",
        "from": src_id,
        "from_params": {k: v.literal() for k, v in sorted(src_bind.items())},
        "to": tgt_id,
        "to_params": {k: v.literal() for k, v in sorted(tgt_bind.items())},
        "q": q.literal(),
        "n": n_top,
        "format": args.format,
        "oracle": args.oracle,
        "as_printed": args.as_printed,
    }
    if n_top > _max_degree():
        raise QConnectError(f"n={n_top} exceeds QPOLY_MAX_DEGREE={_max_degree()}")
    src = _instance(src_id, src_bind, q, n_top)
    tgt = _instance(tgt_id, tgt_bind, q, n_top)
    ns = range(n_top + 1) if args.n is None else [args.n]
    rows, reports = [], []
    for n in ns:
        if args.oracle:
            cv = oracle_connection(src, tgt, n)
        else:
            cv = closed_form_connection(src, tgt, n, as_printed=args.as_printed)
        rows.extend(_rows_from_vector(cv, n))
        if args.as_printed and not args.oracle:
            shipped = closed_form_connection(src, tgt, n)
            reports.extend(
                _mismatch_reports(
                    _rows_from_vector(shipped, n),
                    _rows_from_vector(cv, n),
                    f"{src_id}->{tgt_id}",
                )
            )
    document = {
        "schema_version": SCHEMA_VERSION,
        "request": request,
        "rows": rows,
        "reports": reports,
        "status": "ok",
    }
    return document, 0


def _cmd_verify(args) -> tuple[dict, int]:
    request = {
        "verb": "verify",
        "suite": args.suite,
        "q": args.q,
        "n_max": args.n_max,
        "sets": args.sets,
        "seed": args.seed,
        "format": args.format,
    }
    options = SuiteOptions(q=args.q, n_max=args.n_max, sets=args.sets, seed=args.seed)
    # canonical output order (by identity, which embeds family id, n, m),
    # independent of how the suite scheduled its cells
    reports = sorted(run_suite(args.suite, options), key=lambda r: r.identity_id)
    failing = [r for r in reports if not r.ok()]
    document = {
        "schema_version": SCHEMA_VERSION,
        "request": request,
        "rows": [],
        "reports": _report_dicts(reports),
        "summary": {
            "total": len(reports),
            "match": len(reports) - len(failing),
            "failing": len(failing),
        },
        "status": "ok" if not failing else "fail",
    }
    return document, 0 if not failing else 1


def _cmd_ledger(args) -> tuple[dict, int]:
    document = {
        "schema_version": SCHEMA_VERSION,
        "request": {"verb": "ledger", "format": args.format},
        "rows": [],
        "ledger": _ledger_dicts(),
        "notes": list(NOTATION_NOTES),
        "status": "ok",
    }
    return document, 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qconnect",
        description="Exact inversion and connection coefficients for "
        "q-polynomial families, with oracle verification.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, with_n=True):
        p.add_argument("--q", required=True, help="base q as an exact literal, e.g. 2/5")
        if with_n:
            group = p.add_mutually_exclusive_group(required=True)
            group.add_argument("--n", type=int, help="single degree")
            group.add_argument("--n-max", type=int, dest="n_max",
                               help="emit a grid for all degrees up to this")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--oracle", action="store_true",
                       help="use the brute-force oracle instead of the closed form")
        p.add_argument("--as-printed", action="store_true", dest="as_printed",
                       help="evaluate the printed reference row and report mismatches")
        p.add_argument("--seed", type=int, default=0)

    p_invert = sub.add_parser("invert", help="inversion coefficients I_m(n)")
    p_invert.add_argument("--family", required=True, metavar="FAMILY-ID",
                          help="a registered family id (see README)")
    p_invert.add_argument("--param", action="append", default=[],
                          metavar="NAME=VALUE", help="bind one family parameter")
    common(p_invert)
    p_invert.set_defaults(fn=_cmd_invert)

    p_connect = sub.add_parser("connect", help="connection coefficients C_m(n)")
    p_connect.add_argument("--from", required=True, dest="from",
                           metavar="FAMILY:P=V,...", help="source instance")
    p_connect.add_argument("--to", required=True, metavar="FAMILY:P=V,...",
                           help="target instance")
    common(p_connect)
    p_connect.set_defaults(fn=_cmd_connect)

    p_table = sub.add_parser("table", help="coefficient grid for 0 <= n <= n-max")
    p_table.add_argument("--family", metavar="FAMILY-ID")
    p_table.add_argument("--param", action="append", default=[], metavar="NAME=VALUE")
    p_table.add_argument("--from", dest="from", metavar="FAMILY:P=V,...")
    p_table.add_argument("--to", metavar="FAMILY:P=V,...")
    p_table.add_argument("--q", required=True)
    p_table.add_argument("--n-max", type=int, dest="n_max", required=True)
    p_table.add_argument("--format", choices=("json", "csv"), default="json")
    p_table.add_argument("--oracle", action="store_true")
    p_table.add_argument("--as-printed", action="store_true", dest="as_printed")
    p_table.add_argument("--seed", type=int, default=0)
    p_table.set_defaults(fn=_cmd_table)

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument("--suite", required=True, choices=sorted(SUITES))
    p_verify.add_argument("--q", default="2/5")
    p_verify.add_argument("--n-max", type=int, dest="n_max", default=5)
    p_verify.add_argument("--sets", type=int, default=2)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--format", choices=("json", "csv"), default="json")
    p_verify.set_defaults(fn=_cmd_verify)

    p_ledger = sub.add_parser("ledger", help="print the corrections ledger")
    p_ledger.add_argument("--format", choices=("json", "csv"), default="json")
    p_ledger.set_defaults(fn=_cmd_ledger)

    return parser


def _cmd_table(args) -> tuple[dict, int]:
    args.n = None
    if args.family:
        return _cmd_invert(args)
    if getattr(args, "from") and args.to:
        return _cmd_connect(args)
    raise QConnectError("table needs either --family or both --from and --to")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    request_echo = {"verb": args.verb}
    try:
        document, code = args.fn(args)
    except ScalarParseError as exc:
        sys.stdout.write(_emit(_error_document(request_echo, exc), "json"))
        return 2
    except QConnectError as exc:
        sys.stdout.write(_emit(_error_document(request_echo, exc), "json"))
        return 1
    sys.stdout.write(_emit(document, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
