#!/usr/bin/env python3
"""Audit of the corrections ledger.

The closed forms shipped here were transcribed from printed reference
tables, and some printed rows do not survive an exact oracle check.  For
each such row the package ships an oracle-verified corrected form, keeps
the printed one reachable behind as_printed=True, and records the pair in
the ledger.  This demo replays one mismatch end to end and then lists the
ledger.
"""

from qconnect import (
    CORRECTIONS,
    NOTATION_NOTES,
    QContext,
    closed_form_inversion,
    make_instance,
    oracle_inversion,
)

ctx = QContext("2/5", 6)
inst = make_instance("q-meixner", {"b": "1/3", "c": "4/7"}, ctx)

print("== one printed row, replayed ==")
n = 3
oracle = oracle_inversion(inst, n)
shipped = closed_form_inversion(inst, n)
printed = closed_form_inversion(inst, n, as_printed=True)
print(f"family {inst.spec.id}, n={n}")
print("  oracle :", [v.literal() for v in oracle])
print("  shipped:", [v.literal() for v in shipped], f"({shipped.provenance})")
print("  printed:", [v.literal() for v in printed], f"({printed.provenance})")
ratios = [
    (p / s).literal() if s else "-" for p, s in zip(printed.values, shipped.values)
]
print("  printed/shipped ratio per m:", ratios, " <- the missing q^(m-n) factor")

print()
print(f"== the ledger ({len(CORRECTIONS)} machine-checked entries) ==")
for entry in CORRECTIONS:
    print(f"* {entry.location}")
    print(f"    printed:   {entry.printed_form}")
    print(f"    corrected: {entry.corrected_form}")
    print(f"    evidence:  {entry.evidence}")

print()
print(f"== notation notes ({len(NOTATION_NOTES)}) ==")
for note in NOTATION_NOTES:
    print("*", note)
