"""Reference tables: components for i <= 6, the stable families with j near i,
the i = 6 Jordan census, and a few families for j = 1, 2.

Forests are written as sketches: ``o`` is a node, ``-`` joins a node to its
single child, ``<(X)(Y)`` gives a node two subtrees, and trees of a forest are
separated by spaces.  For example ``o-o<(o)(o) o`` is a three-node path whose
last node ramifies, together with an isolated node.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from ..arith.partition import Partition
from ..forests.trees import Forest

VERSION = "1"


def parse_sketch(text: str) -> Forest:
    shapes = []
    for word in text.split():
        shape, pos = _tree(word, 0)
        if pos != len(word):
            raise ValueError(f"trailing characters in sketch {word!r}")
        shapes.append(shape)
    return Forest(shapes)


def _tree(s: str, pos: int) -> tuple[tuple, int]:
    if pos >= len(s) or s[pos] != "o":
        raise ValueError(f"expected a node at {pos} in {s!r}")
    pos += 1
    if pos < len(s) and s[pos] == "-":
        child, pos = _tree(s, pos + 1)
        return (child,), pos
    if pos < len(s) and s[pos] == "<":
        kids = []
        pos += 1
        for _ in range(2):
            if s[pos] != "(":
                raise ValueError(f"expected '(' at {pos} in {s!r}")
            kid, pos = _tree(s, pos + 1)
            if s[pos] != ")":
                raise ValueError(f"expected ')' at {pos} in {s!r}")
            kids.append(kid)
            pos += 1
        return tuple(kids), pos
    return (), pos


@dataclass(frozen=True)
class RefRow:
    label: str
    i: int
    j: int
    c: int
    mu: int
    jordan: str
    sketch: str
    note: str = ""
    formula_derived: bool = False  # filled in from the formulas, not computed independently

    @property
    def forest(self) -> Forest:
        return parse_sketch(self.sketch).canonical()

    @property
    def partition(self) -> Partition:
        return Partition.parse(self.jordan)

    def key(self) -> tuple:
        return (self.forest.encoding(), self.c, self.mu, self.partition.parts)


_A22 = """
C111 1 1 1 1 1 o
C211 2 1 2 1 2 o-o
C221 2 2 1 2 1+1 o o
C311 3 1 4 1 3 o-o-o
C312 3 1 1 2 2+1 o<(o)(o)
C321 3 2 4 3 2+1 o-o o
C331 3 3 1 6 1+1+1 o o o
C411 4 1 8 1 4 o-o-o-o
C412 4 1 2 2 3+1 o-o<(o)(o)
C413 4 1 4 3 3+1 o<(o-o)(o)
C421 4 2 8 4 3+1 o-o-o o
C422 4 2 4 6 2+2 o-o o-o
C423 4 2 2 8 2+1+1 o<(o)(o) o
C431 4 3 6 12 2+1+1 o-o o o
C441 4 4 1 24 1+1+1+1 o o o o
C511 5 1 16 1 5 o-o-o-o-o
C512 5 1 4 2 4+1 o-o-o<(o)(o)
C513 5 1 8 3 4+1 o-o<(o-o)(o)
C514 5 1 8 4 4+1 o<(o-o-o)(o)
C515 5 1 4 6 3+2 o<(o-o)(o-o)
C516 5 1 2 8 3+1+1 o<(o<(o)(o))(o)
C521 5 2 16 5 4+1 o-o-o-o o
C522 5 2 16 10 3+2 o-o-o o-o
C523 5 2 4 10 3+1+1 o-o<(o)(o) o
C524 5 2 8 15 3+1+1 o<(o-o)(o) o
C525 5 2 4 20 2+2+1 o<(o)(o) o-o
C531 5 3 12 20 3+1+1 o-o-o o o
C532 5 3 12 30 2+2+1 o-o o-o o
C533 5 3 3 40 2+1+1+1 o<(o)(o) o o
C541 5 4 8 60 2+1+1+1 o-o o o o
C551 5 5 1 120 1+1+1+1+1 o o o o o
C611 6 1 32 1 6 o-o-o-o-o-o
C612 6 1 8 2 5+1 o-o-o-o<(o)(o)
C613 6 1 16 3 5+1 o-o-o<(o-o)(o)
C614 6 1 16 4 5+1 o-o<(o-o-o)(o)
C615 6 1 16 5 5+1 o<(o-o-o-o)(o)
C616 6 1 8 6 4+2 o-o<(o-o)(o-o)
C617 6 1 4 8 4+1+1 o-o<(o<(o)(o))(o)
C618a 6 1 8 10 4+2 o<(o-o-o)(o-o)
C618b 6 1 8 10 4+2 o<(o-o-o)(o-o)
C619 6 1 4 10 4+1+1 o<(o-o<(o)(o))(o)
C6,1,10 6 1 8 15 4+1+1 o<(o<(o-o)(o))(o)
C6,1,11 6 1 4 20 3+2+1 o<(o<(o)(o))(o-o)
C621 6 2 32 6 5+1 o-o-o-o-o o
C622 6 2 8 12 4+1+1 o-o-o<(o)(o) o
C623 6 2 32 15 4+2 o-o-o-o o-o
C624 6 2 16 18 4+1+1 o-o<(o-o)(o) o
C625 6 2 16 20 3+3 o-o-o o-o-o
C626 6 2 16 24 4+1+1 o<(o-o-o)(o) o
C627 6 2 8 30 3+2+1 o-o<(o)(o) o-o
C628 6 2 8 36 3+2+1 o<(o-o)(o-o) o
C629 6 2 8 40 3+2+1 o<(o)(o) o-o-o
C6,2,10 6 2 16 45 3+2+1 o<(o-o)(o) o-o
C6,2,11 6 2 4 48 3+1+1+1 o<(o<(o)(o))(o) o
C6,2,12 6 2 1 80 2+2+1+1 o<(o)(o) o<(o)(o)
C631 6 3 24 30 4+1+1 o-o-o-o o o
C632 6 3 48 60 3+2+1 o-o-o o-o o
C633 6 3 8 90 2+2+2 o-o o-o o-o
C634 6 3 6 60 3+1+1+1 o-o<(o)(o) o o
C635 6 3 12 90 3+1+1+1 o<(o-o)(o) o o
C636 6 3 12 120 2+2+1+1 o<(o)(o) o-o o
C641 6 4 16 120 3+1+1+1 o-o-o o o o
C642 6 4 24 180 2+2+1+1 o-o o-o o o
C643 6 4 4 240 2+1+1+1+1 o<(o)(o) o o o
C651 6 5 10 360 2+1+1+1+1 o-o o o o o
C661 6 6 1 720 1+1+1+1+1+1 o o o o o o
"""


def _load_a22() -> list[RefRow]:
    rows = []
    for line in _A22.strip().splitlines():
        label, i, j, c, mu, jordan, *sketch = line.split()
        i, j = int(i), int(j)
        note = "defined over Q(sqrt(-1)); the pair is Galois conjugate" if label.startswith("C618") else ""
        rows.append(RefRow(label, i, j, int(c), int(mu), jordan, " ".join(sketch), note,
                           formula_derived=(i == 6 and j >= 3)))
    return rows


TABLE_A22: list[RefRow] = _load_a22()


def a22_rows(i: int | None = None, j: int | None = None) -> list[RefRow]:
    return [r for r in TABLE_A22 if (i is None or r.i == i) and (j is None or r.j == j)]


# -- stable families with j = i - alpha, alpha <= 3 ------------------------------

def _ones(n: int) -> list[int]:
    return [1] * n


@dataclass(frozen=True)
class FamilyRow:
    label: str
    alpha: int  # j = i - alpha
    i_min: int
    c: object
    mu_div: int  # multiplicity is i! / mu_div
    jordan: object
    sketch: object

    def at(self, i: int) -> RefRow:
        if i < self.i_min:
            raise ValueError(f"{self.label} needs i >= {self.i_min}")
        lab = self.label.format(i=i, j=i - self.alpha)
        return RefRow(lab, i, i - self.alpha, self.c(i), factorial(i) // self.mu_div,
                      str(Partition(self.jordan(i))), self.sketch(i))


def _dots(n: int) -> str:
    return " ".join(["o"] * n)


def _join(*parts: str) -> str:
    return " ".join(p for p in parts if p)


TABLE_A3: list[FamilyRow] = [
    FamilyRow("C{i},{j},1", 3, 4, lambda i: 8 * (i - 3), 24,
              lambda i: [4] + _ones(i - 4), lambda i: _join("o-o-o-o", _dots(i - 4))),
    FamilyRow("C{i},{j},2", 3, 5, lambda i: 8 * (i - 3) * (i - 4), 12,
              lambda i: [3, 2] + _ones(i - 5), lambda i: _join("o-o-o o-o", _dots(i - 5))),
    FamilyRow("C{i},{j},3", 3, 6, lambda i: 8 * comb(i - 3, 3), 8,
              lambda i: [2, 2, 2] + _ones(i - 6), lambda i: _join("o-o o-o o-o", _dots(i - 6))),
    FamilyRow("C{i},{j},4", 3, 4, lambda i: 2 * (i - 3), 12,
              lambda i: [3] + _ones(i - 3), lambda i: _join("o-o<(o)(o)", _dots(i - 4))),
    FamilyRow("C{i},{j},5", 3, 4, lambda i: 4 * (i - 3), 8,
              lambda i: [3] + _ones(i - 3), lambda i: _join("o<(o-o)(o)", _dots(i - 4))),
    FamilyRow("C{i},{j},6", 3, 5, lambda i: 2 * (i - 3) * (i - 4), 6,
              lambda i: [2, 2] + _ones(i - 4), lambda i: _join("o<(o)(o) o-o", _dots(i - 5))),
    FamilyRow("C{i},{j},1", 2, 3, lambda i: 4 * (i - 2), 6,
              lambda i: [3] + _ones(i - 3), lambda i: _join("o-o-o", _dots(i - 3))),
    FamilyRow("C{i},{j},2", 2, 4, lambda i: 2 * (i - 2) * (i - 3), 4,
              lambda i: [2, 2] + _ones(i - 4), lambda i: _join("o-o o-o", _dots(i - 4))),
    FamilyRow("C{i},{j},3", 2, 3, lambda i: i - 2, 3,
              lambda i: [2] + _ones(i - 2), lambda i: _join("o<(o)(o)", _dots(i - 3))),
    FamilyRow("C{i},{j},1", 1, 2, lambda i: 2 * (i - 1), 2,
              lambda i: [2] + _ones(i - 2), lambda i: _join("o-o", _dots(i - 2))),
    FamilyRow("C{i},{j},1", 0, 1, lambda i: 1, 1,
              lambda i: _ones(i), lambda i: _dots(i)),
]


def a3_rows(i: int, alpha: int) -> list[RefRow]:
    """The family rows with j = i - alpha that exist at this i."""
    return [f.at(i) for f in TABLE_A3 if f.alpha == alpha and i >= f.i_min]


# -- Jordan census for i = 6 ----------------------------------------------------------

# counts of components over Q(sqrt(-1)); the pair C618a/b is one component over Q
TABLE_A4: dict[str, dict[int, int]] = {
    "6": {1: 1},
    "5+1": {1: 4, 2: 1},
    "4+2": {1: 3, 2: 1},
    "3+3": {2: 1},
    "4+1+1": {1: 3, 2: 3, 3: 1},
    "3+2+1": {1: 1, 2: 4, 3: 1},
    "3+1+1+1": {2: 1, 3: 2, 4: 1},
    "2+2+2": {3: 1},
    "2+2+1+1": {2: 1, 3: 1, 4: 1},
    "2+1+1+1+1": {4: 1, 5: 1},
    "1+1+1+1+1+1": {6: 1},
}
TABLE_A4_OVER_Q: dict[str, dict[int, int]] = {**TABLE_A4, "4+2": {1: 2, 2: 1}}


# -- families for j = 1, 2 (own numbering; reference only, never diffed) ---------------

TABLE_A5 = [
    {"label": "C(i,1,1)", "j": 1, "c": lambda i: 2 ** (i - 1), "mu": 1, "jordan": lambda i: [i], "i_min": 1},
    {"label": "C(i,1,2)", "j": 1, "c": lambda i: 2 ** (i - 3), "mu": 2, "jordan": lambda i: [i - 1, 1], "i_min": 3},
    {"label": "C(i,1,3)", "j": 1, "c": lambda i: 2 ** (i - 2), "mu": 3, "jordan": lambda i: [i - 1, 1], "i_min": 4},
    {"label": "C(i,1,4)", "j": 1, "c": lambda i: 2 ** (i - 2), "mu": 4, "jordan": lambda i: [i - 1, 1], "i_min": 5},
    {"label": "C(i,2,1)", "j": 2, "c": lambda i: 2 ** (i - 1), "mu": lambda i: i, "jordan": lambda i: [i - 1, 1], "i_min": 3},
]


def format_label(i: int, j: int, k) -> str:
    if max(i, j, k if isinstance(k, int) else 0) >= 10:
        return f"C{i},{j},{k}"
    return f"C{i}{j}{k}"
