"""Checking that lambda_*(F, w) lies in X(m, i): D(m, 0..i-1) vanish identically in c.

Three routes, all exact:

* ``symbolic`` (default): expand the characteristic polynomial over
  Q(zeta)[c_1..c_j], with isolated nodes handled by ``symbolic_param``.
* ``grid``: evaluate on a product grid with more points per variable than the
  degree of D(m, k)(lambda(c)) in that variable.  A polynomial vanishing on
  such a grid is zero, so this is a proof.
* ``lines``: for grids too large to visit, restrict to seeded random lines
  c = p + s*v and evaluate at more points than the total degree.  This proves
  vanishing on each line, and gives vanishing everywhere with high probability.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from ..arith.linalg import charpoly_coeffs
from ..forests.trees import Forest
from ..matrices import build_M
from .param import _forest, param_at

GRID_BUDGET = 6000


@dataclass
class MembershipResult:
    ok: bool
    method: str
    m: int
    i: int
    points: int = 0
    witness: dict | None = None
    notes: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def _low_coeffs(m: int, lam: Sequence, i: int) -> list:
    return charpoly_coeffs(build_M(m, lam))[:i]


def _sample_values(n: int) -> list[int]:
    """n distinct small integers 0, 1, -1, 2, -2, ..."""
    out = [0]
    k = 1
    while len(out) < n:
        out.append(k)
        if len(out) < n:
            out.append(-k)
        k += 1
    return out


def degree_bounds(F: Forest) -> tuple[list[int], int]:
    """Per-variable and total degree bounds for D(m, k)(lambda(c)), any k."""
    m = F.i + F.j
    per = [(m - 1) * (1 << t.max_depth) for t in F.trees]
    return per, sum(per)


def membership_verify(F, w: Sequence[int], method: str = "auto", seed: int = 0,
                      lines: int = 2, budget: int | None = None) -> MembershipResult:
    F = _forest(F)
    i, m = F.i, F.i + F.j
    per, total = degree_bounds(F)
    budget = GRID_BUDGET if budget is None else budget
    grid_size = 1
    for p in per:
        grid_size *= p + 1
    if method == "auto":
        method = "symbolic"
    elif method == "evaluate":
        method = "grid" if grid_size <= budget else "lines"
    if method == "symbolic":
        return _symbolic(F, w, m, i)
    if method == "grid":
        axes = [_sample_values(p + 1) for p in per]
        count = 0
        for c in product(*axes):
            count += 1
            bad = _check_point(F, w, m, i, c)
            if bad is not None:
                return MembershipResult(False, "grid", m, i, count, {"c": list(c), "D_index": bad})
        return MembershipResult(True, "grid", m, i, count)
    if method == "lines":
        rng = random.Random(seed)
        count = 0
        for _ in range(lines):
            p0 = [Fraction(rng.randint(-50, 50)) for _ in range(F.j)]
            v = [Fraction(rng.randint(1, 50)) for _ in range(F.j)]
            for s in _sample_values(total + 1):
                c = [x + s * y for x, y in zip(p0, v)]
                count += 1
                bad = _check_point(F, w, m, i, c)
                if bad is not None:
                    return MembershipResult(False, "lines", m, i, count, {"c": [str(x) for x in c], "D_index": bad})
        res = MembershipResult(True, "lines", m, i, count)
        res.notes.append(f"full grid would need {grid_size} points")
        return res
    raise ValueError(f"unknown method {method!r}")


def _check_point(F, w, m, i, c) -> int | None:
    lam = param_at(F, w, c)
    for k, v in enumerate(_low_coeffs(m, lam, i)):
        if v:
            return k
    return None


def symbolic_param(F: Forest, w) -> list:
    """lambda_* with the isolated-node block replaced by independent coefficients.

    Isolated nodes contribute prod (Y^2 - c_a), whose coefficients are the
    elementary symmetric functions of the c_a.  These are algebraically
    independent and the map c -> e(c) is onto, so an identity in the c_a holds
    iff it holds with the block replaced by a generic monic polynomial in Y^2
    with independent coefficients x_0..x_{s-1}.
    """
    from ..arith.mpoly import MPoly
    from .param import _poly_mul, c_sequence

    iso = [a for a, t in enumerate(F.trees) if t.size == 1]
    rest = [a for a, t in enumerate(F.trees) if t.size > 1]
    s = len(iso)
    ring = tuple(f"c{a + 1}" for a in rest) + tuple(f"x{k}" for k in range(s))
    gens = dict(zip(ring, MPoly.gens(ring)))
    one = MPoly.const(ring, 1)
    poly = [one]
    for f in c_sequence(F, w):
        if f.tree in iso:
            continue
        const = -(gens[f"c{f.tree + 1}"] ** f.power) * f.coeff
        poly = _poly_mul(poly, [const] + [MPoly(ring)] * (f.degree - 1) + [one])
    if s:
        block = []
        for k in range(s):
            block += [gens[f"x{k}"], MPoly(ring)]
        block.append(one)
        poly = _poly_mul(poly, block)
    return [p if isinstance(p, MPoly) else MPoly.const(ring, p) for p in poly]


def _symbolic(F: Forest, w, m: int, i: int) -> MembershipResult:
    lam = symbolic_param(F, w)
    low = _low_coeffs(m, lam, i)
    for k, v in enumerate(low):
        if v:
            return MembershipResult(False, "symbolic", m, i, 0, {"D_index": k, "value": str(v)})
    return MembershipResult(True, "symbolic", m, i)


def d_at_point(m: int, a: Sequence) -> list:
    """D(m, 0..m-1) at a numeric point (convenience for negative checks)."""
    return charpoly_coeffs(build_M(m, list(a)))
