"""The parametrization lambda_*(F, w) of a weighted forest."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..arith.cyclotomic import CycNum
from ..arith.mpoly import MPoly
from ..forests.trees import Forest, Tree


def _forest(F) -> Forest:
    return F if isinstance(F, Forest) else Forest.of(F)


def c_names(j: int) -> tuple[str, ...]:
    return tuple(f"c{a + 1}" for a in range(j))


def w_mu(depth: int, value: int):
    """Multiplicative weight zeta_{2^depth}^value."""
    if depth == 0 or value == 0:
        return 1
    z = CycNum.zeta(depth, value)
    return z.to_rational() if z.is_rational() else z


@dataclass(frozen=True)
class Factor:
    """One factor of P(Y): Y^deg - coeff * c_tree^power."""

    tree: int
    node: int
    degree: int  # 1 or 2
    coeff: object  # the root of unity multiplying c^power (sign folded in)
    power: int


def c_sequence(F, w: Sequence[int]) -> list[Factor]:
    """Per-node factors: quadratics at final nodes, linears at simple inner nodes."""
    F = _forest(F)
    depth = F.node_depths
    out = []
    for a, (t, o) in enumerate(zip(F.trees, F.offsets)):
        d = t.max_depth
        for u in range(t.size):
            g = u + o
            k = depth[g]
            kids = t.children[u]
            if not kids:
                out.append(Factor(a, g, 2, w_mu(k, w[g]), 1 << (d - k)))
            elif len(kids) == 1:
                v = kids[0] + o
                # Y + w(v) c^e written as Y - (-w(v)) c^e
                out.append(Factor(a, g, 1, -w_mu(k + 1, w[v]), 1 << (d - k - 1)))
    return out


def _poly_mul(p: list, q: list) -> list:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if not x:
            continue
        for j, y in enumerate(q):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def param_vector(F, w: Sequence[int], ring: Sequence[str] | None = None) -> list[MPoly]:
    """[lambda_0, ..., lambda_m]: coefficients of P(Y) = prod of c_sequence factors."""
    F = _forest(F)
    ring = tuple(ring) if ring is not None else c_names(F.j)
    gens = MPoly.gens(ring)
    one = MPoly.const(ring, 1)
    poly = [one]
    for f in c_sequence(F, w):
        const = -(gens[f.tree] ** f.power) * f.coeff
        factor = [const] + [MPoly(ring)] * (f.degree - 1) + [one]
        poly = _poly_mul(poly, factor)
    return [p if isinstance(p, MPoly) else MPoly.const(ring, p) for p in poly]


def param_at(F, w: Sequence[int], c: Sequence) -> list:
    """lambda_* evaluated at scalar c_1..c_j (cheaper than expanding symbolically)."""
    F = _forest(F)
    poly = [1]
    for f in c_sequence(F, w):
        const = -(c[f.tree] ** f.power) * f.coeff
        factor = [const] + [0] * (f.degree - 1) + [1]
        poly = _poly_mul(poly, factor)
    return poly


def roots_distinct(F, w: Sequence[int], c: Sequence) -> bool:
    """Genericity check: P(Y) at c is squarefree (all c_* values distinct)."""
    from .upoly import upoly_gcd

    p = param_at(F, w, c)
    dp = [k * p[k] for k in range(1, len(p))]
    g = upoly_gcd(p, dp)
    return len(g) == 1
