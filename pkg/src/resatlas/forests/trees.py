"""Rooted binary trees and forests.

A tree is given by its shape: a nested tuple whose entries are the child
shapes (a leaf is ``()``).  The order of children is kept as given, so a Tree
can carry a specific drawing (needed to name nodes the way a picture does);
``canonical()`` sorts children by their encodings.  Nodes are numbered in
preorder, children visited in stored order.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence


def encode(shape: tuple) -> str:
    """Canonical bracket encoding: invariant under child swaps."""
    return _encode(shape)


@lru_cache(maxsize=None)
def _encode(shape: tuple) -> str:
    return "(" + "".join(sorted(_encode(c) for c in shape)) + ")"


def bracket(shape: tuple) -> str:
    """Bracket string of the shape exactly as stored."""
    return "(" + "".join(bracket(c) for c in shape) + ")"


@lru_cache(maxsize=None)
def canonical_shape(shape: tuple) -> tuple:
    kids = sorted((canonical_shape(c) for c in shape), key=_encode)
    return tuple(kids)


def parse_shapes(text: str) -> list[tuple]:
    """Parse a concatenation of bracket trees, e.g. '(())()' -> two trees."""
    stack: list[list] = []
    out: list[tuple] = []
    for ch in text:
        if ch.isspace():
            continue
        if ch == "(":
            stack.append([])
        elif ch == ")":
            if not stack:
                raise ValueError(f"unbalanced bracket string {text!r}")
            node = tuple(stack.pop())
            if len(node) > 2:
                raise ValueError("a node has more than two children")
            if stack:
                stack[-1].append(node)
            else:
                out.append(node)
        else:
            raise ValueError(f"unexpected character {ch!r} in {text!r}")
    if stack:
        raise ValueError(f"unbalanced bracket string {text!r}")
    return out


def chain(length: int) -> tuple:
    """Simple tree with ``length`` nodes."""
    if length < 1:
        raise ValueError("a simple tree has at least one node")
    shape: tuple = ()
    for _ in range(length - 1):
        shape = (shape,)
    return shape


def complete(depth: int) -> tuple:
    shape: tuple = ()
    for _ in range(depth):
        shape = (shape, shape)
    return shape


class Tree:
    __slots__ = ("shape", "children", "parent", "depth", "subshape")

    def __init__(self, shape: tuple):
        if isinstance(shape, str):
            (shape,) = parse_shapes(shape)
        self.shape = shape
        self.children: list[tuple[int, ...]] = []
        self.parent: list[int] = []
        self.depth: list[int] = []
        self.subshape: list[tuple] = []
        self._build(shape, -1, 0)

    def _build(self, shape, parent, depth):
        idx = len(self.children)
        self.children.append(())
        self.parent.append(parent)
        self.depth.append(depth)
        self.subshape.append(shape)
        if len(shape) > 2:
            raise ValueError("binary trees only")
        kids = []
        for c in shape:
            kids.append(self._build(c, idx, depth + 1))
        self.children[idx] = tuple(kids)
        return idx

    @classmethod
    def from_bracket(cls, text: str) -> "Tree":
        shapes = parse_shapes(text)
        if len(shapes) != 1:
            raise ValueError(f"expected one tree, got {len(shapes)}")
        return cls(shapes[0])

    # -- basic statistics ---------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.children)

    @property
    def max_depth(self) -> int:
        return max(self.depth)

    def finals(self) -> list[int]:
        return [u for u, ch in enumerate(self.children) if not ch]

    def ramifications(self) -> list[int]:
        return [u for u, ch in enumerate(self.children) if len(ch) == 2]

    @property
    def n_finals(self) -> int:
        return sum(1 for ch in self.children if not ch)

    def is_simple(self) -> bool:
        return all(len(ch) <= 1 for ch in self.children)

    def heights(self) -> list[int]:
        h = [0] * self.size
        for u in reversed(range(self.size)):
            if self.children[u]:
                h[u] = 1 + max(h[c] for c in self.children[u])
        return h

    def descendants(self, u: int) -> list[int]:
        """u and everything below it, in preorder."""
        out = [u]
        stack = list(reversed(self.children[u]))
        while stack:
            x = stack.pop()
            out.append(x)
            stack.extend(reversed(self.children[x]))
        return out

    # -- encodings ----------------------------------------------------------

    def encoding(self) -> str:
        return encode(self.shape)

    def bracket(self) -> str:
        return bracket(self.shape)

    def canonical(self) -> "Tree":
        return Tree(canonical_shape(self.shape))

    def is_canonical(self) -> bool:
        return self.shape == canonical_shape(self.shape)

    def __eq__(self, other):
        return isinstance(other, Tree) and self.shape == other.shape

    def __hash__(self):
        return hash(self.shape)

    def __repr__(self):
        return f"Tree({self.bracket()!r})"

    # -- isomorphisms -------------------------------------------------------

    def iso_map(self, u: int, v: int, other: "Tree | None" = None) -> dict[int, int]:
        """Node map from the subtree at u onto the isomorphic subtree at v (of ``other``)."""
        other = self if other is None else other
        out: dict[int, int] = {}

        def walk(x, y):
            out[x] = y
            cx, cy = self.children[x], other.children[y]
            if len(cx) != len(cy):
                raise ValueError("subtrees are not isomorphic")
            if len(cx) == 1:
                walk(cx[0], cy[0])
            elif len(cx) == 2:
                ex = [encode(self.subshape[c]) for c in cx]
                ey = [encode(other.subshape[c]) for c in cy]
                if ex[0] == ey[0] and ex[1] == ey[1]:
                    walk(cx[0], cy[0])
                    walk(cx[1], cy[1])
                elif ex[0] == ey[1] and ex[1] == ey[0]:
                    walk(cx[0], cy[1])
                    walk(cx[1], cy[0])
                else:
                    raise ValueError("subtrees are not isomorphic")

        walk(u, v)
        return out


class Forest:
    """An ordered list of trees (a multiset once canonicalised)."""

    __slots__ = ("trees", "offsets", "_depth", "_parent", "_tree_of")

    def __init__(self, trees: Iterable):
        trees = [t if isinstance(t, Tree) else Tree(t) for t in trees]
        if not trees:
            raise ValueError("a forest needs at least one tree")
        self.trees: tuple[Tree, ...] = tuple(trees)
        offs = []
        n = 0
        for t in self.trees:
            offs.append(n)
            n += t.size
        self.offsets = tuple(offs)
        self._depth = tuple(d for t in self.trees for d in t.depth)
        self._parent = tuple(
            (p + o if p >= 0 else -1) for t, o in zip(self.trees, self.offsets) for p in t.parent
        )
        self._tree_of = tuple(a for a, t in enumerate(self.trees) for _ in range(t.size))

    @classmethod
    def from_bracket(cls, text: str) -> "Forest":
        return cls(parse_shapes(text))

    @classmethod
    def of(cls, tree) -> "Forest":
        return cls([tree])

    # -- statistics ---------------------------------------------------------

    @property
    def i(self) -> int:
        return len(self._depth)

    @property
    def j(self) -> int:
        return len(self.trees)

    @property
    def l(self) -> int:
        return sum(t.n_finals for t in self.trees)

    @property
    def d(self) -> int:
        return max(t.max_depth for t in self.trees)

    @property
    def node_depths(self) -> tuple[int, ...]:
        return self._depth

    @property
    def node_parents(self) -> tuple[int, ...]:
        return self._parent

    @property
    def node_tree(self) -> tuple[int, ...]:
        return self._tree_of

    def children(self, u: int) -> tuple[int, ...]:
        a = self._tree_of[u]
        o = self.offsets[a]
        return tuple(c + o for c in self.trees[a].children[u - o])

    def roots(self) -> tuple[int, ...]:
        return self.offsets

    def finals(self) -> list[int]:
        return [u + o for t, o in zip(self.trees, self.offsets) for u in t.finals()]

    def heights(self) -> list[int]:
        return [h for t in self.trees for h in t.heights()]

    # -- canonical form -----------------------------------------------------

    def encoding(self) -> str:
        return "".join(sorted(t.encoding() for t in self.trees))

    def bracket(self) -> str:
        return "".join(t.bracket() for t in self.trees)

    def canonical(self) -> "Forest":
        shapes = sorted((canonical_shape(t.shape) for t in self.trees), key=encode)
        return Forest(shapes)

    def is_canonical(self) -> bool:
        return self.bracket() == self.canonical().bracket()

    def __eq__(self, other):
        return isinstance(other, Forest) and self.bracket() == other.bracket()

    def __hash__(self):
        return hash(self.bracket())

    def __repr__(self):
        return f"Forest({self.bracket()!r})"


# -- enumeration -----------------------------------------------------------

@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[tuple, ...]:
    if n == 1:
        return ((),)
    out = {}
    for t in _trees(n - 1):
        s = (t,)
        out[encode(s)] = s
    for a in range(1, (n - 1) // 2 + 1):
        b = n - 1 - a
        for x in _trees(a):
            for y in _trees(b):
                s = canonical_shape((x, y))
                out.setdefault(encode(s), s)
    return tuple(out[k] for k in sorted(out))


def enumerate_trees(i: int) -> list[Tree]:
    if i <= 0:
        raise ValueError("a tree has at least one node")
    return [Tree(s) for s in _trees(i)]


def enumerate_forests(i: int, j: int) -> list[Forest]:
    if i <= 0 or j <= 0:
        raise ValueError("i and j must be positive")
    if j > i:
        return []
    out = []

    def rec(remaining: int, count: int, min_key: tuple, acc: list):
        if count == 0:
            if remaining == 0:
                out.append(Forest(list(acc)))
            return
        # trees are emitted in non-decreasing (size, encoding) order
        for size in range(min_key[0], remaining - (count - 1) + 1):
            for s in _trees(size):
                key = (size, encode(s))
                if key < min_key:
                    continue
                acc.append(s)
                rec(remaining - size, count - 1, key, acc)
                acc.pop()

    rec(i, j, (1, ""), [])
    return [f.canonical() for f in out]


def wedderburn_etherington(n: int) -> int:
    """a(n) from the recurrence; trees with i nodes number a(i+1)."""
    a = [0, 1]
    for k in range(2, n + 1):
        s = sum(a[r] * a[k - r] for r in range(1, (k - 1) // 2 + 1))
        if k % 2 == 0:
            s += comb(a[k // 2] + 1, 2)
        a.append(s)
    return a[n]


# -- automorphisms ---------------------------------------------------------

def _tree_aut_order(shape: tuple) -> int:
    if not shape:
        return 1
    if len(shape) == 1:
        return _tree_aut_order(shape[0])
    x, y = shape
    base = _tree_aut_order(x) * _tree_aut_order(y)
    return base * 2 if encode(x) == encode(y) else base


def aut_order(F) -> int:
    """#Aut(F) = prod over isomorphism classes of #Aut(T)^c * c!."""
    if isinstance(F, Tree):
        return _tree_aut_order(F.shape)
    counts: dict[str, int] = {}
    order = 1
    for t in F.trees:
        counts[t.encoding()] = counts.get(t.encoding(), 0) + 1
        order *= _tree_aut_order(t.shape)
    for c in counts.values():
        order *= factorial(c)
    return order


def aut_generators(F: Forest) -> list[tuple[int, ...]]:
    """Node permutations generating Aut(F): child swaps and swaps of equal trees."""
    gens = []
    n = F.i
    for a, (t, o) in enumerate(zip(F.trees, F.offsets)):
        for u in t.ramifications():
            x, y = t.children[u]
            if encode(t.subshape[x]) != encode(t.subshape[y]):
                continue
            perm = list(range(n))
            fwd = t.iso_map(x, y)
            for p, q in fwd.items():
                perm[p + o] = q + o
                perm[q + o] = p + o
            gens.append(tuple(perm))
    for a in range(F.j):
        for b in range(a + 1, F.j):
            ta, tb = F.trees[a], F.trees[b]
            if ta.encoding() != tb.encoding():
                continue
            perm = list(range(n))
            for p, q in ta.iso_map(0, 0, tb).items():
                perm[p + F.offsets[a]] = q + F.offsets[b]
                perm[q + F.offsets[b]] = p + F.offsets[a]
            gens.append(tuple(perm))
            break  # adjacent transpositions of equal trees suffice
    return gens


# -- contraction -------------------------------------------------------------

def _is_complete(shape: tuple) -> int | None:
    """Depth if the shape is a complete binary tree, else None."""
    if not shape:
        return 0
    if len(shape) != 2:
        return None
    a, b = (_is_complete(c) for c in shape)
    if a is None or a != b:
        return None
    return a + 1


def minimal_contraction(T: Tree) -> tuple[Tree, int]:
    """Shallowest T' such that T arises by replacing deepest final nodes of T' by complete trees."""
    d = T.max_depth
    for gamma in range(d, -1, -1):
        level = d - gamma
        nodes = [u for u in range(T.size) if T.depth[u] == level]
        if all(_is_complete(T.subshape[u]) is not None for u in nodes):
            return Tree(_truncate(T.shape, level)), gamma
    raise AssertionError("gamma = 0 always qualifies")


def _truncate(shape: tuple, level: int) -> tuple:
    if level == 0:
        return ()
    return tuple(_truncate(c, level - 1) for c in shape)
