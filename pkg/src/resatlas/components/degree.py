"""Degrees and multiplicities of components im phi(F, w)."""
from __future__ import annotations

import random
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from ..forests.trees import Forest, Tree, canonical_shape, encode, minimal_contraction
from ..forests.weights import orbit_rep
from .param import _forest, param_at, param_vector
from .upoly import degree as udegree
from .upoly import upoly_gcd


def canonicalize(F, w: Sequence[int]) -> tuple[Forest, tuple]:
    """Move (F, w) onto the canonical forest and return the orbit representative there."""
    F = _forest(F)
    pieces = []
    for t, o in zip(F.trees, F.offsets):
        ct = Tree(canonical_shape(t.shape))
        m = t.iso_map(0, 0, ct)
        local = [0] * t.size
        for u, v in m.items():
            local[v] = w[u + o]
        pieces.append((ct.encoding(), ct, tuple(local)))
    pieces.sort(key=lambda p: p[0])
    G = Forest([p[1] for p in pieces])
    flat = tuple(x for p in pieces for x in p[2])
    return G, orbit_rep(G, flat)


def tree_classes(F, w: Sequence[int]) -> list[int]:
    """Sizes f_1, ..., f_j' of the classes of trees equal up to isomorphism and a G-shift."""
    F = _forest(F)
    counts: dict = {}
    for t, o in zip(F.trees, F.offsets):
        G, rep = canonicalize(Forest([t]), w[o:o + t.size])
        key = (G.encoding(), rep)
        counts[key] = counts.get(key, 0) + 1
    return sorted(counts.values(), reverse=True)


def degree_coefficient(F, w: Sequence[int]) -> int:
    """2^{sum d} * j! / (2^{sum gamma} * prod f!)."""
    F = _forest(F)
    num = factorial(F.j)
    den = 1
    for t in F.trees:
        _, g = minimal_contraction(t)
        num <<= t.max_depth
        den <<= g
    for f in tree_classes(F, w):
        den *= factorial(f)
    if num % den:
        raise ArithmeticError("degree formula is not integral")
    return num // den


def segre_multinomial(n: Sequence[int], c: Sequence[int]) -> int:
    """Coefficient of the pushforward of L_1^c_1 ... L_j^c_j under the Segre map."""
    diffs = [a - b for a, b in zip(n, c)]
    if any(x < 0 for x in diffs):
        raise ValueError("exponent exceeds the dimension of a factor")
    out = factorial(sum(diffs))
    for x in diffs:
        out //= factorial(x)
    return out


def tree_multiplicity(T: Tree) -> int:
    out = 1
    for u in T.ramifications():
        a, b = (len(T.descendants(c)) for c in T.children[u])
        out *= comb(a + b, a)
    return out


def multiplicity(F) -> int:
    F = _forest(F)
    out = factorial(F.i)
    for t in F.trees:
        out //= factorial(t.size)
    for t in F.trees:
        out *= tree_multiplicity(t)
    return out


def covering_and_degree(T, w: Sequence[int], seed: int = 0, retries: int = 5) -> dict:
    """Contraction depth gamma, the measured covering degree and the image degree.

    The fibre of c -> lambda_*(c) through a generic c0 is the common zero set
    of lambda_b(c) - lambda_b(c0); its size is the degree of their gcd.
    """
    F = _forest(T)
    if F.j != 1:
        raise ValueError("covering degree is defined for a single tree")
    t = F.trees[0]
    _, g = minimal_contraction(t)
    d = t.max_depth
    lam = param_vector(F, w)
    step = 1 << g
    in_subring = all(e[0] % step == 0 for p in lam for e, _ in p.items())
    rng = random.Random(seed)
    cover = None
    for _ in range(retries):
        c0 = Fraction(rng.randint(2, 97), rng.randint(1, 13))
        base = param_at(F, w, [c0])
        acc = [0]
        for p, b0 in zip(lam, base):
            coeffs = [0] * (p.total_degree() + 1 if p else 1)
            for e, v in p.items():
                coeffs[e[0]] = v
            coeffs[0] = coeffs[0] - b0
            acc = upoly_gcd(acc, coeffs) if any(coeffs) else acc
        k = udegree(acc)
        if k > 0 and _squarefree(acc):
            cover = k
            break
    hyper = _hyperplane_degree(lam, rng)
    return {
        "gamma": g,
        "depth": d,
        "subring": in_subring,
        "covering": cover,
        "param_degree": hyper,
        "degree": (hyper // cover) if cover else None,
        "predicted": 1 << (d - g),
    }


def _squarefree(p: list) -> bool:
    dp = [k * p[k] for k in range(1, len(p))]
    return udegree(upoly_gcd(p, dp)) == 0


def _hyperplane_degree(lam, rng) -> int:
    """Degree in c of a random linear combination of the lambda_b."""
    total = None
    for p in lam:
        h = rng.randint(1, 1000)
        total = p * h if total is None else total + p * h
    return total.total_degree()


def chow_pushforward(e1: int, e2: int, n: int) -> int:
    """Degree in P^{2n+1} of the image of the divisor class e1*L_1 + e2*L_n on P^1 x P^n.

    Uses tau_*(L_1) = L^{n+1} and tau_*(L_n) = n L^{n+1}.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return e1 + e2 * n


def series_degree(c: int, i: int, j: int, m: int) -> int:
    """c * binom(m - i, j); zero below m = i + j."""
    return c * comb(m - i, j) if m >= i + j else 0


def cmu_sum_target(i: int, j: int) -> int:
    return comb(i - 1, i - j) * factorial(i)


__all__ = [
    "canonicalize", "chow_pushforward", "covering_and_degree", "degree_coefficient",
    "cmu_sum_target", "multiplicity", "segre_multinomial", "series_degree", "tree_classes",
    "tree_multiplicity",
]
