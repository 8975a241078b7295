"""Dense univariate polynomials over Q or Q(zeta), coefficient lists low-to-high."""
from __future__ import annotations

from fractions import Fraction

from ..arith.cyclotomic import inverse


def trim(p: list) -> list:
    p = list(p)
    while len(p) > 1 and not p[-1]:
        p.pop()
    return p or [0]


def degree(p: list) -> int:
    p = trim(p)
    return -1 if len(p) == 1 and not p[0] else len(p) - 1


def _monic(p: list) -> list:
    inv = inverse(p[-1])
    return [x * inv for x in p]


def upoly_rem(a: list, b: list) -> list:
    a = trim(a)
    b = trim(b)
    if degree(b) < 0:
        raise ZeroDivisionError("division by the zero polynomial")
    inv = inverse(b[-1])
    a = [Fraction(x) if isinstance(x, int) else x for x in a]
    while degree(a) >= degree(b):
        shift = len(a) - len(b)
        f = a[-1] * inv
        for k, y in enumerate(b):
            if y:
                a[k + shift] = a[k + shift] - f * y
        a = trim(a[:-1]) if len(a) > 1 else [0]
        if degree(a) < 0:
            break
    return trim(a)


def upoly_gcd(a: list, b: list) -> list:
    """Monic gcd (the zero polynomial is [0])."""
    a, b = trim(a), trim(b)
    while degree(b) >= 0:
        a, b = b, upoly_rem(a, b)
    if degree(a) < 0:
        return [0]
    return _monic(a)
