"""Additive weights on forests and the groups acting on them.

A weight is a tuple with one entry per forest node (forest node order); the
entry at a node of depth k is a residue in Z/2^k stored in [0, 2^k).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .trees import Forest, Tree, aut_generators, encode

Weight = tuple


def _as_forest(F) -> Forest:
    return F if isinstance(F, Forest) else Forest.of(F)


def is_admissible(F, w: Sequence[int]) -> bool:
    F = _as_forest(F)
    if len(w) != F.i:
        return False
    depth, parent = F.node_depths, F.node_parents
    for u in range(F.i):
        k = depth[u]
        if not 0 <= w[u] < (1 << k) or (k == 0 and w[u] != 0):
            return False
        p = parent[u]
        if p >= 0 and (w[u] - w[p]) % (1 << depth[p]):
            return False
    for u in range(F.i):
        ch = F.children(u)
        if len(ch) == 2 and w[ch[0]] == w[ch[1]]:
            return False
    return True


def enumerate_weights(F) -> list[Weight]:
    F = _as_forest(F)
    depth = F.node_depths
    order = list(range(F.i))  # preorder: parents precede children
    w = [0] * F.i
    out: list[Weight] = []

    def rec(pos: int):
        if pos == len(order):
            out.append(tuple(w))
            return
        u = order[pos]
        ch = F.children(u)
        if not ch:
            return rec(pos + 1) if pos + 1 <= len(order) else None
        k = depth[u]
        base = w[u]
        opts = (base, base + (1 << k))
        if len(ch) == 1:
            for v in opts:
                w[ch[0]] = v
                rec(pos + 1)
        else:
            for v0, v1 in ((opts[0], opts[1]), (opts[1], opts[0])):
                w[ch[0]], w[ch[1]] = v0, v1
                rec(pos + 1)

    for r in F.roots():
        w[r] = 0
    rec(0)
    return out


def weight_from_finals(F, finals: Sequence[int]) -> Weight:
    """Rebuild a full weight from its values at the final nodes (forest final order)."""
    F = _as_forest(F)
    fin = F.finals()
    if len(finals) != len(fin):
        raise ValueError(f"expected {len(fin)} final values, got {len(finals)}")
    depth, parent = F.node_depths, F.node_parents
    w = [None] * F.i
    for u, v in zip(fin, finals):
        x = u
        while x >= 0:
            val = v % (1 << depth[x])
            if w[x] is None:
                w[x] = val
            elif w[x] != val:
                raise ValueError("final values are inconsistent with the tree")
            x = parent[x]
    out = tuple(w)
    if not is_admissible(F, out):
        raise ValueError("final values do not define an admissible weight")
    return out


def finals_of(F, w: Sequence[int]) -> tuple[int, ...]:
    F = _as_forest(F)
    return tuple(w[u] for u in F.finals())


# -- group actions -----------------------------------------------------------

def shift(F, g: Sequence[int], w: Sequence[int]) -> Weight:
    """Action of (g_alpha) in prod Z/2^{d_alpha}: add g_alpha mod 2^depth."""
    F = _as_forest(F)
    depth, tree = F.node_depths, F.node_tree
    return tuple((w[u] + g[tree[u]]) % (1 << depth[u]) for u in range(F.i))


def galois(F, gamma: int, w: Sequence[int]) -> Weight:
    if gamma % 2 == 0:
        raise ValueError("Galois element must be odd")
    F = _as_forest(F)
    depth = F.node_depths
    return tuple((gamma * w[u]) % (1 << depth[u]) for u in range(F.i))


def permute(perm: Sequence[int], w: Sequence[int]) -> Weight:
    """Relabel nodes: the value at u moves to perm[u]."""
    out = [0] * len(w)
    for u, v in enumerate(w):
        out[perm[u]] = v
    return tuple(out)


@dataclass(frozen=True)
class GroupElem:
    """Element (shift, perm) of G(F) x| Aut(F), acting as w -> shift(perm(w))."""

    shift: tuple
    perm: tuple

    def act(self, F, w):
        return shift(F, self.shift, permute(self.perm, w))

    def compose(self, other: "GroupElem", F) -> "GroupElem":
        """self * other (apply other first)."""
        F = _as_forest(F)
        # perm_s(shift_o(x)) = shift'(perm_s(x)) with shift' = shift_o moved along the tree permutation
        root_map = {}
        for a, o in enumerate(F.offsets):
            root_map[a] = F.node_tree[self.perm[o]]
        moved = [0] * F.j
        for a in range(F.j):
            moved[root_map[a]] = other.shift[a]
        total = tuple(
            (x + y) % (1 << F.trees[a].max_depth) if F.trees[a].max_depth else 0
            for a, (x, y) in enumerate(zip(self.shift, moved))
        )
        perm = tuple(self.perm[other.perm[u]] for u in range(F.i))
        return GroupElem(total, perm)


def act(F, g, w):
    """Dispatch: GroupElem, an odd integer (Galois), or a shift tuple."""
    if isinstance(g, GroupElem):
        return g.act(F, w)
    if isinstance(g, int):
        return galois(F, g, w)
    return shift(F, g, w)


def _generators(F: Forest):
    gens = []
    for a, t in enumerate(F.trees):
        if t.max_depth:
            g = [0] * F.j
            g[a] = 1
            gens.append(("shift", tuple(g)))
    for p in aut_generators(F):
        gens.append(("perm", p))
    return gens


def orbit(F, w: Sequence[int]) -> set[Weight]:
    F = _as_forest(F)
    gens = _generators(F)
    seen = {tuple(w)}
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for kind, g in gens:
            y = shift(F, g, x) if kind == "shift" else permute(g, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def weight_orbits(F) -> list[tuple[Weight, int]]:
    """[(canonical representative, orbit size)] under G(F) x| Aut(F), sorted."""
    F = _as_forest(F)
    todo = set(enumerate_weights(F))
    out = []
    while todo:
        w = min(todo)
        orb = orbit(F, w)
        todo -= orb
        out.append((min(orb), len(orb)))
    out.sort()
    return out


def orbit_rep(F, w: Sequence[int]) -> Weight:
    return min(orbit(F, w))


def group_order(F) -> int:
    from .trees import aut_order

    F = _as_forest(F)
    g = 1
    for t in F.trees:
        g *= 1 << t.max_depth
    return g * aut_order(F)


# -- Galois orbits and fields of definition ----------------------------------

def units(d: int) -> list[int]:
    return [g for g in range(1, 1 << d, 2)] if d >= 1 else [1]


def field_label(stabilizer: Iterable[int], d: int) -> str:
    """Name the fixed field of a subgroup H of (Z/2^d)^*."""
    H = set(stabilizer)
    for e in range(0, d + 1):
        mod = 1 << e
        kernel = [g for g in units(d) if g % mod == 1 % mod]
        if all(g in H for g in kernel):
            break
    if e <= 1:
        return "Q"
    mod = 1 << e
    image = sorted({g % mod for g in H})
    if image == [1]:
        return f"Q({e})"
    if image == sorted({1, mod - 1}):
        return f"Q({e})^+"
    if len(image) == len(units(e)):
        return "Q"
    return f"Q({e})^<{','.join(map(str, image))}>"


def galois_orbit_and_field(F, w: Sequence[int], d: int | None = None) -> tuple[int, str]:
    F = _as_forest(F)
    d = F.d if d is None else d
    rep = orbit_rep(F, w)
    classes = {}
    stab = []
    for g in units(d):
        c = orbit_rep(F, galois(F, g, rep))
        classes[c] = True
        if c == rep:
            stab.append(g)
    return len(classes), field_label(stab, d)


# -- root elimination ----------------------------------------------------------

def eliminate_root(T, w: Sequence[int]) -> tuple[Forest, Weight]:
    """Remove the root, halve the weights of the remaining nodes."""
    if isinstance(T, Forest):
        if T.j != 1:
            raise ValueError("root elimination acts on a single tree")
        T = T.trees[0]
    if T.size < 2:
        raise ValueError("cannot eliminate the root of a single node")
    kids = T.children[0]
    parts = []
    values = []
    for c in kids:
        nodes = T.descendants(c)
        base = w[c]
        for u in nodes:
            k = T.depth[u]
            diff = (w[u] - base) % (1 << k)
            if diff % 2:
                raise ValueError("weight is not admissible")
            values.append(diff // 2)
        parts.append(T.subshape[c])
    return Forest(parts), tuple(values)
