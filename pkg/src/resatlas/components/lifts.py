"""The series map nu, the even and odd lifts, and the identities tying them to D and H.

Identities that hold only up to sign are checked up to one global sign;
each check returns ``(holds, sign)`` with the realized sign.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from ..arith.linalg import char_poly, charpoly_coeffs, det, matmul, matpow, rank
from ..arith.mpoly import MPoly
from ..arith.partition import Partition
from ..matrices import (
    CoeffVector,
    build_M,
    carlitz_matrix,
    d_odd_system,
    h_coefficients,
    names,
    odd_blocks,
    odd_matrix,
)
from .jordan_rank import partition_from_ranks, rank_profile


def _signed_equal(lhs, rhs) -> tuple[bool, int]:
    if lhs == rhs:
        return True, 1
    if lhs == -rhs:
        return True, -1
    return False, 0


def _gens(ring: Sequence[str]) -> dict:
    return dict(zip(ring, MPoly.gens(ring)))


# -- nu -----------------------------------------------------------------------

def nu_extend(lam: Sequence, b: Sequence) -> list:
    """Coefficients of the product of sum lam_g x^g and sum b_s x^s."""
    out = [0] * (len(lam) + len(b) - 1)
    for g, x in enumerate(lam):
        if not x:
            continue
        for s, y in enumerate(b):
            if y:
                out[g + s] = out[g + s] + x * y
    return out


def nu_identity(m: int, i: int) -> tuple[bool, int]:
    """D(m+1, i)(nu(lam, (b0, b1))) against sum_g (-1)^{m-i-g} H_{ig,1}(lam) b0^g b1^{m-i-g}."""
    ring = ("t", "b0", "b1") + names("l", m)
    g = _gens(ring)
    lam = [g[v] for v in names("l", m)]
    a = nu_extend(lam, [g["b0"], g["b1"]])
    lhs = charpoly_coeffs(build_M(m + 1, a))[i]
    table = h_coefficients(lam, 1, m, ring)
    rhs = MPoly(ring)
    for gam in range(m - i + 1):
        h = table.get((i, gam))
        if h is None:
            continue
        sign = -1 if (m - i - gam) % 2 else 1
        rhs = rhs + h * (g["b0"] ** gam) * (g["b1"] ** (m - i - gam)) * sign
    lhs = lhs if isinstance(lhs, MPoly) else MPoly.const(ring, lhs)
    return _signed_equal(lhs.with_vars(ring), rhs)


def nu_specialization(m: int) -> bool:
    """M(m+1)(nu(lam, (t, -1))) equals the n = 1 Carlitz matrix of lam of size m, entry by entry."""
    ring = ("t",) + names("l", m)
    g = _gens(ring)
    lam = [g[v] for v in names("l", m)]
    a = nu_extend(lam, [g["t"], MPoly.const(ring, -1)])
    left = build_M(m + 1, a)
    right = carlitz_matrix(lam, 1, m, g["t"])
    return all(
        (x if isinstance(x, MPoly) else MPoly.const(ring, x)) ==
        (y if isinstance(y, MPoly) else MPoly.const(ring, y))
        for rl, rr in zip(left, right) for x, y in zip(rl, rr)
    )


# -- even lift ------------------------------------------------------------------

def interleave(a: Sequence) -> list:
    """(a_0, 0, a_1, 0, ..., 0, a_m)."""
    out = []
    for k, x in enumerate(a):
        if k:
            out.append(0)
        out.append(x)
    return out


def even_factorization(m: int) -> tuple[bool, int]:
    """Ch(M(m)) on the subspace a_odd = 0 against U^{m/2} Ch(M(m/2)) of the even coordinates."""
    if m % 2 or m < 4:
        raise ValueError("m must be even and at least 4")
    half = m // 2
    ring = ("U",) + names("a", half)
    g = _gens(ring)
    small = [g[v] for v in names("a", half)]
    lhs = char_poly(build_M(m, interleave(small)), "U", ring)
    rhs = char_poly(build_M(half, small), "U", ring) * (g["U"] ** half)
    return _signed_equal(lhs, rhs)


def even_rank_identity(a: Sequence, powers: int | None = None) -> bool:
    """rank M(m)(a)^k == rank M(2m)(interleaved a)^{k+1} for k = 0 .. powers."""
    m = len(a) - 1
    small = build_M(m, list(a))
    big = build_M(2 * m, interleave(a))
    powers = m if powers is None else powers
    P, Q = None, big
    for k in range(powers + 1):
        left = (m - 1) if k == 0 else rank(P)
        if rank(Q) != left:
            return False
        P = small if P is None else matmul(P, small)
        Q = matmul(Q, big)
    return True


def even_submatrix_identity(a: Sequence, power: int) -> bool:
    """Even rows and columns of M(2m)(interleaved a)^k form M(m)(a)^k."""
    m = len(a) - 1
    big = matpow(build_M(2 * m, interleave(a)), power)
    small = matpow(build_M(m, list(a)), power)
    even = [[big[r][c] for c in range(1, 2 * m - 1, 2)] for r in range(1, 2 * m - 1, 2)]
    return even == small


def lift_partition(p: Partition, m: int) -> Partition:
    """(d_1+1) + ... + (d_l+1) + 1^{m-l}."""
    parts = [x + 1 for x in p.parts]
    extra = m - len(parts)
    if extra < 0:
        raise ValueError("partition has more than m parts")
    return Partition(parts + [1] * extra)


def even_lift(record: dict, m: int) -> dict:
    """Bookkeeping for the even lift of C_ijk(m) into X(2m, m+i)."""
    from math import comb

    i, j = record["i"], record["j"]
    if m < i + j:
        raise ValueError("the series member is empty below m = i + j")
    part = lift_partition(Partition(record["jordan"]), m)
    return {
        "i": m + i,
        "j": m - i,
        "m": 2 * m,
        "c": record["c"] * comb(m - i, j),
        "jordan": list(part.parts),
        "flags": ["conjectural"],
        "source": {k: record[k] for k in ("i", "j", "c") if k in record},
    }


def even_lift_partition_at(a: Sequence) -> tuple[Partition, Partition]:
    """Jordan partitions of M(m)(a) and of M(2m)(interleaved a)."""
    m = len(a) - 1
    small = partition_from_ranks(rank_profile(build_M(m, list(a))))
    big = partition_from_ranks(rank_profile(build_M(2 * m, interleave(a))))
    return small, big


# -- odd lift -------------------------------------------------------------------

def odd_segre(b: Sequence, lam, mu) -> list:
    """tau(b): a_{2j} = mu b_j, a_{2j+1} = lam b_j."""
    out = []
    for x in b:
        out.append(mu * x)
        out.append(lam * x)
    return out


def segre_certificate(a: Sequence):
    """Recover ((lam, mu), b) with a = tau(b), or None if the 2 x (alpha+1) matrix has rank 2."""
    if len(a) % 2:
        raise ValueError("odd lift needs m = 2 alpha + 1")
    odd = list(a[1::2])
    even = list(a[0::2])
    if rank([odd, even]) > 1:
        return None
    base = odd if any(odd) else even
    k = next((s for s, x in enumerate(base) if x), None)
    if k is None:
        return (1, 1), [0] * len(odd)
    b = list(base)
    lam = Fraction(odd[k]) / base[k]
    mu = Fraction(even[k]) / base[k]
    return (lam, mu), b


def odd_charpoly_identity(alpha: int) -> tuple[bool, int]:
    """Ch(M(2 alpha + 1)(tau(b))) against Ch_odd(b) * U^alpha."""
    ring = ("U", "lam", "mu") + names("b", alpha)
    g = _gens(ring)
    b = [g[v] for v in names("b", alpha)]
    a = odd_segre(b, g["lam"], g["mu"])
    lhs = char_poly(build_M(2 * alpha + 1, a), "U", ring)
    rhs = MPoly(ring)
    for j, d in enumerate(d_odd_system(alpha)):
        rhs = rhs + d.with_vars(ring) * (g["U"] ** (j + alpha))
    return _signed_equal(lhs, rhs)


def carlitz_blocks_identity(alpha: int) -> bool:
    """The n = 1 Carlitz matrix of b of size alpha equals B t - A."""
    ring = ("t",) + names("b", alpha)
    g = _gens(ring)
    b = [g[v] for v in names("b", alpha)]
    A, B = odd_blocks(alpha, CoeffVector(b))
    M = carlitz_matrix(b, 1, alpha, g["t"])
    for r in range(alpha):
        for c in range(alpha):
            want = B[r][c] * g["t"] - A[r][c]
            got = M[r][c]
            got = got if isinstance(got, MPoly) else MPoly.const(ring, got)
            want = want if isinstance(want, MPoly) else MPoly.const(ring, want)
            if got != want:
                return False
    return True


def odd_h_identity(alpha: int) -> dict:
    """D_odd(alpha, j) = sum_k +-H_jk lam^{alpha-j-k} mu^k; per (j, k) signs."""
    ring = ("t", "lam", "mu") + names("b", alpha)
    table = h_coefficients([MPoly.gens(ring)[3 + s] for s in range(alpha + 1)], 1, alpha, ring)
    signs = {}
    ok = True
    for j, d in enumerate(d_odd_system(alpha)):
        dd = d.with_vars(("U",) + ring[1:])
        by_mu = dd.coeff_in("mu")
        for k in range(alpha - j + 1):
            part = by_mu.get(k, MPoly(dd.vars))
            lam_parts = part.coeff_in("lam")
            extra = set(lam_parts) - {alpha - j - k}
            coef = lam_parts.get(alpha - j - k, MPoly(dd.vars))
            h = table.get((j, k), MPoly(ring)).with_vars(ring).subs({"t": 0}, ring[1:])
            coef = coef.with_vars(("U",) + ring[1:]).subs({"U": 0}, ring[1:])
            good, s = _signed_equal(coef, h.with_vars(ring[1:]))
            if extra or not good:
                ok = False
            signs[(j, k)] = s
        if set(by_mu) - set(range(alpha - j + 1)):
            ok = False
    return {"ok": ok, "signs": signs}


def h0_identity(alpha: int) -> tuple[bool, int]:
    """H_{0j,1}(alpha) = +-b_j D(alpha, 0).

    The per-j signs alternate, so the statement is checked in the generating
    form sum_j H_{0j,1} t^j = +-D(alpha, 0) * sum_j b_j (-t)^j, one global sign.
    """
    ring = ("t",) + names("b", alpha)
    g = _gens(ring)
    b = [g[v] for v in names("b", alpha)]
    table = h_coefficients(b, 1, alpha, ring)
    d0 = det(build_M(alpha, b))
    d0 = d0 if isinstance(d0, MPoly) else MPoly.const(ring, d0)
    lhs = MPoly(ring)
    rhs = MPoly(ring)
    for j in range(alpha + 1):
        tj = g["t"] ** j
        lhs = lhs + table.get((0, j), MPoly(ring)).with_vars(ring) * tj
        rhs = rhs + b[j] * tj * (-1 if j % 2 else 1)
    return _signed_equal(lhs, rhs * d0.with_vars(ring))


def odd_segre_rank_certificate(alpha: int, seed: int = 0, trials: int = 4) -> bool:
    """Points tau(b) give rank <= alpha and are recovered; generic points are rejected."""
    rng = random.Random(seed)
    m = 2 * alpha + 1
    for _ in range(trials):
        b = [Fraction(rng.randint(-30, 30), rng.randint(1, 5)) for _ in range(alpha + 1)]
        lam, mu = Fraction(rng.randint(1, 20)), Fraction(rng.randint(1, 20))
        a = odd_segre(b, lam, mu)
        if rank(build_M(m, a)) > alpha:
            return False
        cert = segre_certificate(a)
        if cert is None:
            return False
        (l2, m2), b2 = cert
        if odd_segre(b2, l2, m2) != [Fraction(x) for x in a]:
            return False
        generic = [Fraction(rng.randint(-30, 30), rng.randint(1, 5)) for _ in range(m + 1)]
        if segre_certificate(generic) is not None and rank(build_M(m, generic)) > alpha:
            return False
    return True


# -- the subspace a_1 = ... = a_{m-1} = 0 -----------------------------------------

def lambda_subspace_charpoly(m: int) -> MPoly:
    """Ch(M(m)) at (a_0 : 0 : ... : 0 : a_m)."""
    ring = ("U", "a0", f"a{m}")
    g = _gens(ring)
    a = [0] * (m + 1)
    a[0], a[m] = g["a0"], g[f"a{m}"]
    return char_poly(build_M(m, a), "U", ring)


def is_pure_power(p: MPoly, m: int) -> bool:
    u = MPoly.gens(p.vars)[0]
    return p == u ** (m - 1) or p == -(u ** (m - 1))


def is_power_of_two(m: int) -> bool:
    return m > 0 and m & (m - 1) == 0


def odd_matrix_numeric(alpha: int, b: Sequence, lam, mu) -> list:
    return odd_matrix(alpha, CoeffVector(list(b)), lam, mu)
