"""Diffs of enumerated records against the embedded reference tables."""
from __future__ import annotations

from collections import Counter

from ..components.records import ComponentRecord
from .reference import TABLE_A4, RefRow, a22_rows, a3_rows


def _rec_key(r: ComponentRecord) -> tuple:
    return (r.forest.encoding(), r.c, r.mu, r.jordan)


def _row_json(row: RefRow) -> dict:
    return {"label": row.label, "c": row.c, "mu": row.mu, "jordan": row.jordan,
            "sketch": row.sketch, "formula_derived": row.formula_derived}


def diff_block(records: list[ComponentRecord], rows: list[RefRow], table: str, i: int, j: int) -> dict:
    """Multiset comparison on (forest, c, mu, Jordan partition).

    Unmatched rows and records sharing a forest are reported as mismatched;
    the rest are missing (in the table only) or extra (computed only).
    """
    want = {}
    for row in rows:
        want.setdefault(row.key(), []).append(row)
    matched = 0
    extra = []
    for r in records:
        bucket = want.get(_rec_key(r))
        if bucket:
            bucket.pop(0)
            matched += 1
        else:
            extra.append(r)
    missing = [row for bucket in want.values() for row in bucket]
    mismatched = []
    for row in list(missing):
        enc = row.key()[0]
        for r in extra:
            if r.forest.encoding() == enc:
                mismatched.append({"reference": _row_json(row), "computed": r.to_json()})
                missing.remove(row)
                extra.remove(r)
                break
    return {
        "table": table, "i": i, "j": j,
        "reference_rows": len(rows), "computed_rows": len(records), "matched": matched,
        "missing": [_row_json(r) for r in missing],
        "extra": [r.to_json() for r in extra],
        "mismatched": mismatched,
        "ok": not (missing or extra or mismatched),
    }


def diff_a22(records: list[ComponentRecord], i: int, j: int) -> dict | None:
    rows = a22_rows(i, j)
    if not rows:
        return None
    return diff_block(records, rows, "A2.2", i, j)


def diff_a3(records: list[ComponentRecord], i: int, j: int) -> dict | None:
    alpha = i - j
    if alpha > 3:
        return None
    rows = a3_rows(i, alpha)
    if not rows:
        return None
    return diff_block(records, rows, "A3", i, j)


def jordan_census(records: list[ComponentRecord]) -> dict[str, dict[int, int]]:
    count: Counter = Counter()
    for r in records:
        count["+".join(map(str, r.jordan)), r.j] += 1
    out: dict[str, dict[int, int]] = {}
    for (form, j), n in sorted(count.items()):
        out.setdefault(form, {})[j] = n
    return out


def diff_a4(records: list[ComponentRecord]) -> dict:
    """Jordan-form census at i = 6 (counted over Q(sqrt(-1)))."""
    got = jordan_census([r for r in records if r.i == 6])
    forms = sorted(set(got) | set(TABLE_A4), key=lambda s: [-int(x) for x in s.split("+")])
    rows = []
    for f in forms:
        a, b = TABLE_A4.get(f, {}), got.get(f, {})
        if a != b:
            rows.append({"jordan": f, "reference": a, "computed": b})
    return {"table": "A4", "i": 6, "differences": rows, "ok": not rows}
