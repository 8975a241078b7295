"""Structured matrices: truncated Hurwitz matrices, Carlitz matrices, odd block matrices.

Conventions (fixed once, used everywhere):

* Ch(M) = det(M - U*I) with no extra sign; D(m, i) is the coefficient of U^i in
  Ch(M(m)).
* H_{ij,n}(m) is the coefficient of t^j T^(k-i) in det(I_k - M_nt*T), where M_nt
  is the k x k non-trivial part of the Carlitz matrix, k = m + n - 1 (q = 2).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .arith.linalg import berkowitz, charpoly_coeffs, det, det_laplace
from .arith.mpoly import MPoly


class EmptyVarietyError(ValueError):
    pass


class CoeffVector:
    """a_0..a_m with a_s = 0 outside [0, m]."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence):
        self.entries = tuple(entries)

    @property
    def m(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, s: int):
        if 0 <= s < len(self.entries):
            return self.entries[s]
        return 0

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self):
        return f"CoeffVector({[str(e) for e in self.entries]})"


def _as_vector(a) -> CoeffVector:
    return a if isinstance(a, CoeffVector) else CoeffVector(a)


def names(prefix: str, m: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{s}" for s in range(m + 1))


def symbolic_vector(m: int, prefix: str = "a", ring: Sequence[str] | None = None) -> CoeffVector:
    """Generators a_0..a_m inside ``ring`` (default: exactly those variables)."""
    vs = names(prefix, m)
    ring = tuple(ring) if ring is not None else vs
    gens = dict(zip(ring, MPoly.gens(ring)))
    return CoeffVector(gens[v] for v in vs)


# -- M(m) and D(m, i) --------------------------------------------------------

def build_M(m: int, a) -> list:
    """The (m-1)x(m-1) matrix with (i, j) entry a_{2j-i} (1-based)."""
    if m < 2:
        raise EmptyVarietyError(f"M(m) needs m >= 2, got {m}")
    a = _as_vector(a)
    n = m - 1
    return [[a[2 * j - i] for j in range(1, n + 1)] for i in range(1, n + 1)]


@dataclass(frozen=True)
class DSystem:
    m: int
    polys: tuple  # D(m,0), ..., D(m,m-2)

    def __getitem__(self, i: int) -> MPoly:
        return self.polys[i]

    def dump(self) -> str:
        return "\n".join(f"D({self.m},{i}) = {p}" for i, p in enumerate(self.polys))


def d_system(m: int, prefix: str = "a") -> DSystem:
    """D(m, 0..m-2) as polynomials over Z in a_0..a_m."""
    M = build_M(m, symbolic_vector(m, prefix))
    coeffs = charpoly_coeffs(M)
    ring = names(prefix, m)
    polys = tuple(c if isinstance(c, MPoly) else MPoly.const(ring, c) for c in coeffs[: m - 1])
    return DSystem(m, polys)


def d_values(m: int, a) -> list:
    """D(m, 0..m-1) at a point (the last one is (-1)^(m-1))."""
    return charpoly_coeffs(build_M(m, a))


# -- Carlitz matrices and H_{ij,n} -------------------------------------------

def carlitz_matrix(a, n: int, size: int, t) -> list:
    """Entries sum_l (-1)^l binom(n,l) a_{2j-i-l} t^(n-l), 1-based (q = 2)."""
    if size < 0:
        raise ValueError("negative size")
    if n < 0:
        raise ValueError("negative n")
    a = _as_vector(a)
    tp = [t ** e if e else 1 for e in range(n + 1)]
    rows = []
    for i in range(1, size + 1):
        row = []
        for j in range(1, size + 1):
            s = 0
            for l in range(n + 1):
                x = a[2 * j - i - l]
                if x:
                    s = s + ((-1) ** l * comb(n, l)) * x * tp[n - l]
            row.append(s)
        rows.append(row)
    return rows


@dataclass(frozen=True)
class HSystem:
    m: int
    n: int
    k: int
    table: dict  # (i, j) -> MPoly in the a-variables

    def __getitem__(self, key):
        return self.table.get(key, 0)

    def dump(self) -> str:
        lines = []
        for (i, j), p in sorted(self.table.items()):
            lines.append(f"H({i},{j};{self.n})({self.m}) = {p}")
        return "\n".join(lines)


def h_coefficients(a, n: int, k: int, ring: Sequence[str]) -> dict:
    """{(i, j): H_ij} for the k x k non-trivial Carlitz matrix of ``a``.

    ``ring`` must contain the variable 't'; returned values live in ``ring``
    with t eliminated (i.e. still declared, but of degree 0).
    """
    ring = tuple(ring)
    t = MPoly.gens(ring)[ring.index("t")]
    M = carlitz_matrix(a, n, k, t)
    p = berkowitz(M)  # det(xI - M) highest first; coefficient of T^r in det(I - MT) is p[r]
    table = {}
    for i in range(k + 1):
        c = p[k - i]
        if not isinstance(c, MPoly):
            c = MPoly.const(ring, c)
        for j, coef in c.coeff_in("t").items():
            table[(i, j)] = coef
    return table


def h_system(m: int, n: int, prefix: str = "a") -> HSystem:
    k = m + n - 1
    ring = ("t",) + names(prefix, m)
    a = symbolic_vector(m, prefix, ring)
    table = h_coefficients(a, n, k, ring) if k > 0 else {}
    base = names(prefix, m)
    return HSystem(m, n, k, {key: v.with_vars(("t",) + base).subs({"t": 1}, base) for key, v in table.items()})


# -- Sylvester resultant -----------------------------------------------------

def sylvester_matrix(f: Sequence, g: Sequence) -> list:
    """Sylvester matrix of f = sum f_k x^k and g = sum g_k x^k (formal degrees)."""
    p, q = len(f) - 1, len(g) - 1
    size = p + q
    rows = []
    for r in range(q):
        row = [0] * size
        for k, c in enumerate(reversed(f)):
            row[r + k] = c
        rows.append(row)
    for r in range(p):
        row = [0] * size
        for k, c in enumerate(reversed(g)):
            row[r + k] = c
        rows.append(row)
    return rows


def parity_polys(a) -> tuple[list, list]:
    """(P_[1], P_[0]): coefficient lists of a_1 + a_3 x + ... and a_0 + a_2 x + ..."""
    a = _as_vector(a)
    m = a.m
    odd = [a[s] for s in range(1, m + 1, 2)]
    even = [a[s] for s in range(0, m + 1, 2)]
    return odd, even


def sylvester_resultant_check(m: int) -> tuple[bool, int]:
    """Compare det M(m) with Res(P_[1], P_[0]); returns (holds, realized sign)."""
    if m < 3:
        raise ValueError("resultant check needs m >= 3")
    a = symbolic_vector(m)
    lhs = det(build_M(m, a))
    odd, even = parity_polys(a)
    rhs = det_laplace(sylvester_matrix(odd, even))
    if lhs == rhs:
        return True, 1
    if lhs == -rhs:
        return True, -1
    return False, 0


# -- odd block matrices ------------------------------------------------------

def odd_blocks(alpha: int, b) -> tuple[list, list]:
    """The alpha x alpha blocks A and B of the odd matrix."""
    if alpha < 2:
        raise ValueError("alpha must be at least 2")
    b = _as_vector(b)
    eps = alpha % 2
    inner = build_M(alpha, b)  # (alpha-1) x (alpha-1)
    A = []
    top = [b[0]] + [b[s] for s in range(2, alpha - eps + 1, 2)]
    A.append(top + [0] * (alpha - len(top)))
    for row in inner:
        A.append([0] + list(row))
    B = [list(row) + [0] for row in inner]
    tail = [b[s] for s in range(eps, alpha - 1, 2)]
    B.append([0] * (alpha - 1 - len(tail)) + tail + [b[alpha]])
    return A, B


def odd_matrix(alpha: int, b, lam, mu) -> list:
    """[[A, B], [mu*I, -lam*I]]."""
    A, B = odd_blocks(alpha, b)
    rows = [list(ra) + list(rb) for ra, rb in zip(A, B)]
    for r in range(alpha):
        row = [0] * (2 * alpha)
        row[r] = mu
        row[alpha + r] = -lam
        rows.append(row)
    return rows


def odd_ring(alpha: int) -> tuple[str, ...]:
    return ("U", "lam", "mu") + names("b", alpha)


def d_odd_system(alpha: int) -> list[MPoly]:
    """D_odd(alpha, 0..alpha): coefficients in U of det[[A - (U/lam) I, B], [mu I, -lam I]].

    The determinant is expanded with V = U/lam as a polynomial variable; the
    coefficient of V^j is then exactly divisible by lam^j.
    """
    ring = ("V",) + odd_ring(alpha)[1:]
    gens = dict(zip(ring, MPoly.gens(ring)))
    b = CoeffVector(gens[v] for v in names("b", alpha))
    M = odd_matrix(alpha, b, gens["lam"], gens["mu"])
    for r in range(alpha):
        M[r][r] = M[r][r] - gens["V"]
    full = det(M)
    out_ring = odd_ring(alpha)
    parts = full.coeff_in("V")
    lam_idx = ring.index("lam")
    result = []
    for j in range(alpha + 1):
        c = parts.get(j, MPoly(ring))
        result.append(_divide_by_power(c, lam_idx, j).with_vars(ring).subs({"V": 0}, out_ring[1:]).with_vars(out_ring))
    return result


def _divide_by_power(p: MPoly, idx: int, e: int) -> MPoly:
    from .arith.mpoly import _BITS, _MASK

    shift = _BITS * idx
    out = {}
    for k, c in p.terms.items():
        if ((k >> shift) & _MASK) < e:
            raise ArithmeticError("coefficient not divisible by the requested power")
        out[k - (e << shift)] = c
    return MPoly(p.vars, out)


def trace_law(m: int) -> tuple[bool, int]:
    """D(m, m-2) against a_1 + ... + a_{m-1}, symbolically, up to sign."""
    if m < 3:
        raise ValueError("m must be at least 3")
    ring = names("a", m)
    gens = MPoly.gens(ring)
    target = MPoly(ring)
    for k in range(1, m):
        target = target + gens[k]
    got = d_system(m)[m - 2]
    if got == target:
        return True, 1
    if got == -target:
        return True, -1
    return False, 0
