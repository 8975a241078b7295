"""Component records: one per G(F) x| Aut(F) orbit of weights on a forest."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from ..forests.jordan import jordan_partition
from ..forests.trees import Forest, enumerate_forests
from ..forests.weights import finals_of, galois_orbit_and_field, weight_from_finals, weight_orbits
from .degree import degree_coefficient, multiplicity

CONJECTURAL = ("degree:conjectural", "multiplicity:conjectural")


@dataclass
class ComponentRecord:
    forest: Forest
    weight: tuple
    i: int
    j: int
    c: int
    mu: int
    jordan: tuple
    field: str
    galois_orbit: int
    k: int = 0
    table_label: str | None = None
    flags: list = field(default_factory=lambda: list(CONJECTURAL))

    @property
    def m_min(self) -> int:
        return self.i + self.j

    @property
    def label(self) -> str:
        if max(self.i, self.j, self.k) >= 10:
            return f"C{self.i},{self.j},{self.k}"
        return f"C{self.i}{self.j}{self.k}"

    def degree(self, m: int) -> int:
        """c * binom(m - i, j); the series member vanishes below m = i + j."""
        return self.c * comb(m - self.i, self.j) if m >= self.m_min else 0

    def sort_key(self) -> tuple:
        return (self.c, self.mu, self.jordan, self.forest.encoding(), self.weight)

    def mark(self, flag: str):
        if flag not in self.flags:
            self.flags.append(flag)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "table_label": self.table_label,
            "forest": self.forest.bracket(),
            "weight": list(finals_of(self.forest, self.weight)),
            "i": self.i,
            "j": self.j,
            "c": self.c,
            "mu": self.mu,
            "jordan": list(self.jordan),
            "field": self.field,
            "galois_orbit": self.galois_orbit,
            "flags": list(self.flags),
        }

    @classmethod
    def from_json(cls, data: dict) -> "ComponentRecord":
        F = Forest.from_bracket(data["forest"])
        w = weight_from_finals(F, data["weight"])
        rec = cls(F, w, data["i"], data["j"], data["c"], data["mu"], tuple(data["jordan"]),
                  data["field"], data["galois_orbit"], table_label=data.get("table_label"),
                  flags=list(data.get("flags", CONJECTURAL)))
        label = data.get("label", "")
        rec.k = int(label.split(",")[-1]) if "," in label else int(label[3:] or 0)
        return rec


def make_record(F: Forest, w: tuple) -> ComponentRecord:
    size, fld = galois_orbit_and_field(F, w)
    return ComponentRecord(
        forest=F, weight=tuple(w), i=F.i, j=F.j,
        c=degree_coefficient(F, w), mu=multiplicity(F),
        jordan=jordan_partition(F).parts, field=fld, galois_orbit=size,
    )


def enumerate_components(i: int, j: int | None = None) -> list[ComponentRecord]:
    """Records of Irr(i, j) (all j when omitted), labelled k = 1, 2, ... within each (i, j)."""
    js = [j] if j is not None else list(range(1, i + 1))
    out = []
    for jj in js:
        recs = [make_record(F, w) for F in enumerate_forests(i, jj) for w, _ in weight_orbits(F)]
        recs.sort(key=ComponentRecord.sort_key)
        for k, r in enumerate(recs, 1):
            r.k = k
        assign_table_labels(recs)
        out.extend(recs)
    return out


def assign_table_labels(records: list[ComponentRecord]):
    from ..atlas.reference import TABLE_A22

    pool: dict[tuple, list[str]] = {}
    for row in TABLE_A22:
        pool.setdefault(row.key(), []).append(row.label)
    for r in records:
        key = (r.forest.encoding(), r.c, r.mu, r.jordan)
        labels = pool.get(key)
        if labels:
            r.table_label = labels.pop(0)


def cmu_total(records: list[ComponentRecord]) -> int:
    return sum(r.c * r.mu for r in records)
