"""Jordan partitions of forests and the inverse construction."""
from __future__ import annotations

from itertools import combinations

from ..arith.partition import Partition
from .trees import Forest, Tree, canonical_shape, chain, encode, parse_shapes


def _is_chain(shape: tuple) -> bool:
    while shape:
        if len(shape) != 1:
            return False
        shape = shape[0]
    return True


def _chain_len(shape: tuple) -> int:
    n = 1
    while shape:
        shape = shape[0]
        n += 1
    return n


def _min_branch(shape: tuple) -> int | None:
    """Shortest final branch hanging from a ramification node, if any."""
    if not shape:
        return None
    if len(shape) == 1:
        return _min_branch(shape[0])
    best = None
    for c in shape:
        h = _chain_len(c) if _is_chain(c) else _min_branch(c)
        if h is not None and (best is None or h < best):
            best = h
    return best


def _count_final_ram(shape: tuple, h: int) -> int:
    """Final ramification nodes with at least one final branch of length h."""
    if not shape:
        return 0
    if len(shape) == 1:
        return _count_final_ram(shape[0], h)
    hit = any(_is_chain(c) and _chain_len(c) == h for c in shape)
    return int(hit) + sum(_count_final_ram(c, h) for c in shape if not _is_chain(c))


def _cut(shape: tuple, h: int) -> tuple:
    """Remove h nodes from the end of every final branch."""
    if len(shape) == 1:
        return (_cut(shape[0], h),)
    kids = []
    for c in shape:
        if _is_chain(c):
            n = _chain_len(c)
            if n > h:
                kids.append(chain(n - h))
        else:
            kids.append(_cut(c, h))
    return tuple(kids)


def tree_partition(shape: tuple) -> list[int]:
    """Iterated final-branch trimming of a single tree."""
    parts: list[int] = []
    acc = 0
    while True:
        if _is_chain(shape):
            parts.append(acc + _chain_len(shape))
            break
        h = _min_branch(shape)
        parts.extend([acc + h] * _count_final_ram(shape, h))
        shape = _cut(shape, h)
        acc += h
    return parts


def jordan_partition(F) -> Partition:
    if isinstance(F, Tree):
        return Partition(tree_partition(F.shape))
    if isinstance(F, str):
        F = Forest.from_bracket(F)
    parts: list[int] = []
    for t in F.trees:
        parts.extend(tree_partition(t.shape))
    return Partition(parts)


def height_partition(F) -> Partition:
    """Independent route: dim Ker M^k counts nodes of height < k, so the dual
    partition is the sequence of node counts per height."""
    if isinstance(F, Tree):
        heights = F.heights()
    else:
        heights = F.heights()
    counts = [0] * (max(heights) + 1)
    for h in heights:
        counts[h] += 1
    return Partition(counts).dual()


# -- inverse construction -------------------------------------------------------

class _Builder:
    """Mutable tree used while growing a tree from a partition."""

    def __init__(self):
        self.children: list[list[int]] = []

    def add(self, parent: int | None) -> int:
        self.children.append([])
        idx = len(self.children) - 1
        if parent is not None:
            self.children[parent].append(idx)
        return idx

    def attach_chain(self, node: int, length: int):
        x = node
        for _ in range(length):
            x = self.add(x)

    def copy(self) -> "_Builder":
        b = _Builder()
        b.children = [list(c) for c in self.children]
        return b

    def shape(self, u: int = 0) -> tuple:
        return tuple(self.shape(c) for c in self.children[u])


def inverse_jordan_trees(sigma: Partition) -> list[Tree]:
    """All trees T with jordan_partition(T) = sigma, via the growth construction."""
    mult = sigma.multiplicities()
    if not mult or mult[0][1] != 1:
        return []
    cs = [c for c, _ in mult] + [0]
    as_ = [a for _, a in mult]
    start = _Builder()
    root = start.add(None)
    start.attach_chain(root, cs[0] - cs[1] - 1)
    states = [start]
    for g in range(1, len(mult)):
        length = cs[g] - cs[g + 1]
        a = as_[g]
        nxt = []
        for b in states:
            finals = [u for u, ch in enumerate(b.children) if not ch]
            free = [u for u, ch in enumerate(b.children) if len(ch) < 2]
            for chosen in combinations(free, a):
                t = b.copy()
                for u in chosen:
                    t.attach_chain(u, length)
                for u in finals:
                    t.attach_chain(u, length)
                nxt.append(t)
        states = _dedupe(nxt)
    trees = {}
    for b in states:
        s = canonical_shape(b.shape())
        trees.setdefault(encode(s), s)
    return [Tree(trees[k]) for k in sorted(trees)]


def _dedupe(builders: list[_Builder]) -> list[_Builder]:
    seen = {}
    for b in builders:
        seen.setdefault(encode(b.shape()), b)
    return list(seen.values())


def partitions_of_partition(sigma: Partition) -> list[tuple[Partition, tuple[Partition, ...]]]:
    """Set partitions of the parts of sigma, identified when the blocks agree as multisets."""
    parts = list(sigma.parts)
    found = set()

    def rec(k: int, blocks: list[list[int]]):
        if k == len(parts):
            key = tuple(sorted(tuple(sorted(bl, reverse=True)) for bl in blocks))
            found.add(key)
            return
        for bl in blocks:
            bl.append(parts[k])
            rec(k + 1, blocks)
            bl.pop()
        blocks.append([parts[k]])
        rec(k + 1, blocks)
        blocks.pop()

    rec(0, [])
    out = []
    for key in sorted(found):
        subs = tuple(Partition(b) for b in key)
        bar = Partition(sum(b) for b in key)
        out.append((bar, subs))
    return out


def inverse_jordan(sigma: Partition) -> list[Forest]:
    """All forests F with jordan_partition(F) = sigma."""
    cache: dict[tuple, list[Tree]] = {}

    def trees_for(p: Partition) -> list[Tree]:
        if p.parts not in cache:
            cache[p.parts] = inverse_jordan_trees(p)
        return cache[p.parts]

    forests = {}
    for _, subs in partitions_of_partition(sigma):
        pools = [trees_for(p) for p in subs]
        if any(not pool for pool in pools):
            continue

        def rec(k: int, acc: list):
            if k == len(pools):
                f = Forest([t.shape for t in acc]).canonical()
                forests.setdefault(f.encoding(), f)
                return
            for t in pools[k]:
                acc.append(t)
                rec(k + 1, acc)
                acc.pop()

        rec(0, [])
    return [forests[k] for k in sorted(forests)]
