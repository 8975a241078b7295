"""Canonical text and table renderings used by the CLI."""
from __future__ import annotations

import csv
import io
from math import comb

from ..arith.mpoly import MPoly
from ..components.param import c_names, param_vector
from ..components.records import ComponentRecord, enumerate_components
from ..components.lifts import nu_extend
from ..matrices import build_M, d_system, h_system, names, odd_matrix, odd_ring, symbolic_vector
from .reference import TABLE_A22

RECORD_FIELDS = ("label", "table_label", "i", "j", "c", "mu", "jordan", "field", "galois_orbit",
                 "forest", "weight", "flags")


def render_matrix(rows: list) -> str:
    cells = [[str(x) for x in r] for r in rows]
    width = max((len(c) for r in cells for c in r), default=1)
    return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)


def dump(obj: str, m: int | None = None, alpha: int | None = None, n: int = 1) -> str:
    if obj == "matrix":
        return f"M({m})\n" + render_matrix(build_M(m, symbolic_vector(m)))
    if obj == "dsystem":
        return d_system(m).dump()
    if obj == "hsystem":
        return h_system(m, n).dump()
    if obj == "odd":
        ring = odd_ring(alpha)
        g = dict(zip(ring, MPoly.gens(ring)))
        b = [g[v] for v in names("b", alpha)]
        return f"odd({alpha})\n" + render_matrix(odd_matrix(alpha, b, g["lam"], g["mu"]))
    raise ValueError(f"unknown object {obj!r}")


def _cell(rec: dict, key: str) -> str:
    v = rec[key]
    if key == "jordan":
        return "+".join(map(str, v))
    if isinstance(v, list):
        return " ".join(map(str, v))
    return "" if v is None else str(v)


def records_csv(records: list[ComponentRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(RECORD_FIELDS)
    for r in records:
        d = r.to_json()
        w.writerow([_cell(d, k) for k in RECORD_FIELDS])
    return buf.getvalue()


def records_markdown(records: list[ComponentRecord]) -> str:
    lines = ["| " + " | ".join(RECORD_FIELDS) + " |", "|" + "---|" * len(RECORD_FIELDS)]
    for r in records:
        d = r.to_json()
        lines.append("| " + " | ".join(_cell(d, k).replace("|", "\\|") for k in RECORD_FIELDS) + " |")
    return "\n".join(lines) + "\n"


# -- series C_ijk(m) ----------------------------------------------------------------

def parse_label(label: str) -> tuple[int, int, str]:
    """'C515' -> (5, 1, '5'); 'C6,1,10' -> (6, 1, '10'); 'C618a' -> (6, 1, '8a')."""
    body = label[1:] if label[:1] in "Cc" else label
    if "," in body:
        i, j, k = body.split(",")
        return int(i), int(j), k
    if len(body) < 3 or not body[:2].isdigit():
        raise ValueError(f"cannot parse label {label!r}")
    return int(body[0]), int(body[1]), body[2:]


def find_record(label: str, scheme: str = "table") -> ComponentRecord:
    i, j, _ = parse_label(label)
    recs = enumerate_components(i, j)
    want = label if label[:1] in "Cc" else "C" + label
    want = "C" + want[1:]
    for r in recs:
        if (r.table_label if scheme == "table" else r.label) == want:
            return r
    raise KeyError(f"no component labelled {label} ({scheme} numbering)")


def series(label: str, m: int, scheme: str = "table") -> dict:
    r = find_record(label, scheme)
    out = {"label": label, "scheme": scheme, "record": r.to_json(), "m": m, "m_min": r.m_min}
    if m < r.m_min:
        out.update(vanishes=True, degree=0,
                   notice=f"{label} has m_min = {r.m_min}; its member for m = {m} is empty")
        return out
    d = m - r.m_min
    bs = names("b", d)
    ring = c_names(r.j) + bs
    lam = param_vector(r.forest, r.weight, ring)
    b = list(MPoly.gens(ring))[r.j:]
    coords = nu_extend(lam, b)
    out.update(
        vanishes=False, d=d,
        degree=r.c * comb(m - r.i, r.j),
        degree_formula=f"{r.c} * binom(m - {r.i}, {r.j})",
        multiplicity=r.mu,
        degree_times_multiplicity=r.c * comb(m - r.i, r.j) * r.mu,
        parametrization={f"a{k}": str(x) for k, x in enumerate(coords)},
    )
    return out


def table_labels() -> list[str]:
    return [row.label for row in TABLE_A22]
