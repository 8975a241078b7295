"""Jordan partitions of the zero eigenvalue read off ranks of matrix powers."""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from ..arith.linalg import matmul, rank
from ..arith.partition import Partition
from ..matrices import build_M
from .param import _forest, param_at, roots_distinct


class UnstableSample(RuntimeError):
    pass


def rank_profile(M: list) -> list[int]:
    """[rank M^0, rank M^1, ...] up to the first repeated value."""
    n = len(M)
    ranks = [n]
    P = M
    while True:
        r = rank(P) if n else 0
        ranks.append(r)
        if r == ranks[-2]:
            return ranks
        P = matmul(P, M)


def partition_from_ranks(ranks: Sequence[int]) -> Partition:
    """Nilpotent Jordan blocks: the number of blocks of size >= k is r_{k-1} - r_k."""
    steps = [a - b for a, b in zip(ranks, ranks[1:]) if a - b > 0]
    if not steps:
        return Partition([])
    return Partition(steps).dual()


def _sample_c(rng: random.Random, j: int) -> list[Fraction]:
    return [Fraction(rng.randint(-60, 60) or 1, rng.randint(1, 9)) for _ in range(j)]


def rank_profile_partition(F, w: Sequence[int], samples: int = 2, seed: int = 0,
                           max_tries: int = 20) -> Partition:
    """Jordan partition of M(m) at lambda_*(c) for seeded generic c, agreed on by `samples` points."""
    F = _forest(F)
    m = F.i + F.j
    rng = random.Random(seed)
    found = []
    tries = 0
    while len(found) < samples:
        tries += 1
        if tries > max_tries:
            raise UnstableSample("could not find enough generic sample points")
        c = _sample_c(rng, F.j)
        if not roots_distinct(F, w, c):
            continue
        p = partition_from_ranks(rank_profile(build_M(m, param_at(F, w, c))))
        found.append(p)
    if any(p != found[0] for p in found):
        raise UnstableSample(f"samples disagree: {[str(p) for p in found]}")
    return found[0]


def lambda_subspace_point(alpha: int, delta: int, values: Sequence) -> list:
    """Point of the subspace a_l = 0 unless 2^alpha divides l, in P^m with m = 2^alpha * delta."""
    if len(values) != delta + 1:
        raise ValueError("need delta + 1 values")
    step = 1 << alpha
    a = [0] * (step * delta + 1)
    for k, v in enumerate(values):
        a[k * step] = v
    return a


def lambda_subspace_ranks(alpha: int, delta: int, seed: int = 0) -> list[int]:
    """rank of M(m)^g for g = 1 .. alpha + 1 at a seeded point of the subspace."""
    rng = random.Random(seed)
    vals = [Fraction(rng.randint(1, 50), rng.randint(1, 7)) for _ in range(delta + 1)]
    a = lambda_subspace_point(alpha, delta, vals)
    M = build_M(len(a) - 1, a)
    out = []
    P = M
    for _ in range(alpha + 1):
        out.append(rank(P))
        P = matmul(P, M)
    return out


def lambda_subspace_expected(alpha: int, delta: int) -> list[int]:
    return [((1 << (alpha - g)) * delta - 1) if g <= alpha else delta - 1
            for g in range(1, alpha + 2)]
