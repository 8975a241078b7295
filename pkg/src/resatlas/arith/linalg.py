"""Exact linear algebra over Z, Q, Q(zeta) and polynomial rings.

Matrices are plain lists of rows.  Everything stays exact: determinants of
polynomial matrices use the division-free Berkowitz recursion, scalar
determinants use Bareiss elimination, and ranks use Gaussian elimination over
the field of fractions of the entries.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .cyclotomic import CycNum, inverse
from .mpoly import MPoly

Matrix = list  # list[list[entry]]


class ShapeError(ValueError):
    pass


def shape(M: Sequence[Sequence]) -> tuple[int, int]:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if any(len(r) != cols for r in M):
        raise ShapeError("ragged matrix")
    return rows, cols


def _square(M) -> int:
    r, c = shape(M)
    if r != c:
        raise ShapeError(f"expected a square matrix, got {r}x{c}")
    return r


def identity(n: int, one=1, zero=0) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    n, k = shape(A)
    k2, m = shape(B)
    if k != k2:
        raise ShapeError("inner dimensions differ")
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(m):
            s = 0
            for t in range(k):
                a = Ai[t]
                if a:
                    b = B[t][j]
                    if b:
                        s = s + a * b
            row.append(s)
        out.append(row)
    return out


def matpow(A: Matrix, e: int) -> Matrix:
    n = _square(A)
    result = identity(n)
    base = A
    while e:
        if e & 1:
            result = matmul(result, base)
        e >>= 1
        if e:
            base = matmul(base, base)
    return result


def transpose(A: Matrix) -> Matrix:
    return [list(r) for r in zip(*A)]


# -- characteristic polynomial ---------------------------------------------

def berkowitz(M: Matrix) -> list:
    """Coefficients of det(x*I - M), highest power first (division free)."""
    n = _square(M)
    p = [1]
    for k in range(n):
        # the (k+1)x(k+1) leading block is [[A_k, S], [R, a]]
        a = M[k][k]
        R = M[k][:k]
        v = [M[r][k] for r in range(k)]
        q = [1, -a]
        for _ in range(k):
            s = 0
            for x, y in zip(R, v):
                if x and y:
                    s = s + x * y
            q.append(-s)
            v = [
                _dot(M[r][:k], v) for r in range(k)
            ]
        new = []
        for i in range(k + 2):
            s = 0
            for j in range(max(0, i - len(q) + 1), min(i, k) + 1):
                qi, pj = q[i - j], p[j]
                if qi and pj:
                    s = s + qi * pj
            new.append(s)
        p = new
    return p


def _dot(row, v):
    s = 0
    for x, y in zip(row, v):
        if x and y:
            s = s + x * y
    return s


def charpoly_coeffs(M: Matrix) -> list:
    """[c_0, ..., c_n] with det(M - U*I) = sum c_k U^k."""
    n = _square(M)
    p = berkowitz(M)  # det(xI - M), highest first
    sign = -1 if n % 2 else 1
    return [sign * p[n - k] if p[n - k] else 0 for k in range(n + 1)]


def char_poly(M: Matrix, var: str = "U", variables: Sequence[str] | None = None) -> MPoly:
    """det(M - var*I) as a polynomial.

    ``variables`` fixes the ring; by default it is ``(var,)`` followed by the
    ring of the first polynomial entry, if any.
    """
    coeffs = charpoly_coeffs(M)
    if variables is None:
        base = next((e.vars for row in M for e in row if isinstance(e, MPoly)), ())
        variables = (var,) + tuple(v for v in base if v != var)
    variables = tuple(variables)
    (u,) = [g for g, name in zip(MPoly.gens(variables), variables) if name == var]
    out = MPoly(variables)
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if isinstance(c, MPoly):
            c = c.with_vars(variables)
        out = out + (u ** k) * c
    return out


# -- determinants ----------------------------------------------------------

def _is_field_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, CycNum))


def det(M: Matrix):
    """Exact determinant; stays inside the coefficient ring."""
    n = _square(M)
    if n == 0:
        return 1
    if all(_is_field_scalar(x) for row in M for x in row):
        if all(isinstance(x, int) for row in M for x in row):
            return det_bareiss(M)
        return det_gauss(M)
    c = charpoly_coeffs(M)[0]
    return c


def det_bareiss(M: Matrix) -> int:
    """Fraction-free Bareiss elimination for integer (or rational) matrices."""
    n = _square(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not A[k][k]:
            for r in range(k + 1, n):
                if A[r][k]:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[i][j] * A[k][k] - A[i][k] * A[k][j]
                A[i][j] = num // prev if isinstance(num, int) and isinstance(prev, int) else num / prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def det_gauss(M: Matrix):
    """Gaussian elimination over Q or Q(zeta)."""
    n = _square(M)
    A = [[Fraction(x) if isinstance(x, int) else x for x in row] for row in M]
    result = 1
    for k in range(n):
        piv = next((r for r in range(k, n) if A[r][k]), None)
        if piv is None:
            return 0
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            result = -result
        pk = A[k][k]
        result = result * pk
        inv = inverse(pk)
        for r in range(k + 1, n):
            f = A[r][k]
            if not f:
                continue
            f = f * inv
            Ar, Ak = A[r], A[k]
            for j in range(k + 1, n):
                if Ak[j]:
                    Ar[j] = Ar[j] - f * Ak[j]
    if isinstance(result, Fraction) and result.denominator == 1:
        return result.numerator
    return result


def det_laplace(M: Matrix):
    """Cofactor expansion with memoised minors; an independent oracle."""
    n = _square(M)
    memo: dict[int, object] = {}

    def minor(row: int, cols: int):
        # determinant of rows row..n-1 restricted to the column set 'cols'
        if row == n:
            return 1
        if cols in memo:
            return memo[cols]
        total = 0
        sign = 1
        for j in range(n):
            if cols >> j & 1:
                x = M[row][j]
                if x:
                    sub = minor(row + 1, cols & ~(1 << j))
                    if sub:
                        term = x * sub
                        total = total + term if sign > 0 else total - term
                sign = -sign
        memo[cols] = total
        return total

    return minor(0, (1 << n) - 1)


# -- rank ------------------------------------------------------------------

def rank(M: Matrix) -> int:
    """Exact rank over Q or Q(zeta); polynomial entries are rejected."""
    rows, cols = shape(M)
    for row in M:
        for x in row:
            if not _is_field_scalar(x):
                raise TypeError("rank needs scalar entries")
    A = [[Fraction(x) if isinstance(x, int) else x for x in row] for row in M]
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = inverse(A[r][c])
        for i in range(r + 1, rows):
            f = A[i][c]
            if not f:
                continue
            f = f * inv
            Ai, Ar = A[i], A[r]
            for j in range(c, cols):
                if Ar[j]:
                    Ai[j] = Ai[j] - f * Ar[j]
        r += 1
        if r == rows:
            break
    return r
