"""Exact arithmetic in the 2-power cyclotomic tower Q(zeta_{2^d}).

Level d (d >= 2) is stored as Q[x]/(x^N + 1) with N = 2^(d-1); levels 0 and 1
are both Q (zeta_1 = -1).  Values are always reduced to the smallest level that
contains them, so equality and hashing never depend on how a value was built.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

MAX_LEVEL = 6


def set_max_level(d: int) -> None:
    global MAX_LEVEL
    if d < 1:
        raise ValueError("maximum level must be at least 1")
    MAX_LEVEL = d


def _norm(v):
    if type(v) is Fraction and v.denominator == 1:
        return v.numerator
    return v


def _width(level: int) -> int:
    return 1 << (level - 1) if level >= 2 else 1


def _reduce(level: int, coords: tuple) -> tuple[int, tuple]:
    if level <= 1:
        return 0, coords[:1]
    while level >= 2:
        odd = coords[1::2]
        if any(odd):
            break
        coords = coords[0::2]
        level -= 1
    if level == 1:
        level = 0
    return level, coords


def _embed(level: int, coords: tuple, target: int) -> tuple:
    if level == target or (target <= 1 and level <= 1):
        return coords
    n = _width(target)
    step = n // _width(level)
    out = [0] * n
    for k, c in enumerate(coords):
        out[k * step] = c
    return tuple(out)


class CycNum:
    """Element of Q(zeta_{2^d}) for some d <= MAX_LEVEL."""

    __slots__ = ("level", "coords")

    def __init__(self, level: int, coords):
        coords = tuple(_norm(Fraction(c)) if not isinstance(c, int) else c for c in coords)
        if level < 0:
            raise ValueError("negative level")
        if level > MAX_LEVEL:
            raise ValueError(f"level {level} exceeds maximum level {MAX_LEVEL}")
        if len(coords) != _width(level):
            raise ValueError(f"level {level} needs {_width(level)} coordinates, got {len(coords)}")
        self.level, self.coords = _reduce(level, coords)

    @classmethod
    def _raw(cls, level: int, coords: tuple) -> "CycNum":
        obj = object.__new__(cls)
        obj.level, obj.coords = _reduce(level, coords)
        return obj

    @classmethod
    def rational(cls, q) -> "CycNum":
        return cls._raw(0, (_norm(Fraction(q)),))

    @classmethod
    def zeta(cls, d: int, k: int = 1) -> "CycNum":
        """zeta_{2^d}^k."""
        if d <= 1:
            return cls.rational(-1 if (d == 1 and k % 2) else 1)
        n = _width(d)
        k %= 2 * n
        sign = 1
        if k >= n:
            k -= n
            sign = -1
        coords = [0] * n
        coords[k] = sign
        return cls._raw(d, tuple(coords))

    # -- conversion ---------------------------------------------------------

    def is_rational(self) -> bool:
        return self.level == 0

    def to_rational(self):
        if self.level:
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def embed(self, level: int) -> tuple:
        """Coordinates of self viewed at a (higher) level."""
        if level < self.level and not (level <= 1 and self.level <= 1):
            raise ValueError("cannot embed into a smaller level")
        return _embed(self.level, self.coords, level)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _lift(x):
        if isinstance(x, CycNum):
            return x
        if isinstance(x, (int, Rational)):
            return CycNum._raw(0, (_norm(Fraction(x)) if not isinstance(x, int) else x,))
        return NotImplemented

    def __bool__(self):
        return any(self.coords)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        lev = max(self.level, other.level)
        a = _embed(self.level, self.coords, lev)
        b = _embed(other.level, other.coords, lev)
        return CycNum._raw(lev, tuple(_norm(x + y) for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum._raw(self.level, tuple(-x for x in self.coords))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycNum._raw(self.level, tuple(x * other for x in self.coords))
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if other.level == 0:
            s = other.coords[0]
            return CycNum._raw(self.level, tuple(_norm(x * s) for x in self.coords))
        if self.level == 0:
            s = self.coords[0]
            return CycNum._raw(other.level, tuple(_norm(x * s) for x in other.coords))
        lev = max(self.level, other.level)
        a = _embed(self.level, self.coords, lev)
        b = _embed(other.level, other.coords, lev)
        n = len(a)
        out = [0] * n
        bnz = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in bnz:
                k = i + j
                if k < n:
                    out[k] += x * y
                else:
                    out[k - n] -= x * y
        return CycNum._raw(lev, tuple(_norm(v) for v in out))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if not self:
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        if self.level == 0:
            return CycNum._raw(0, (_norm(Fraction(1) / self.coords[0]),))
        # a + b*z with z^2 = zeta one level down: 1/(a + bz) = (a - bz)/(a^2 - b^2 z^2)
        d = self.level
        a = CycNum._raw(d - 1, self.coords[0::2]) if d > 2 else CycNum._raw(0, self.coords[:1])
        b = CycNum._raw(d - 1, self.coords[1::2]) if d > 2 else CycNum._raw(0, self.coords[1:2])
        z = CycNum.zeta(d)
        norm = a * a - b * b * CycNum.zeta(d - 1)
        return (a - b * z) * norm.inverse()

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CycNum._raw(0, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.level == other.level and self.coords == other.coords

    def __hash__(self):
        if self.level == 0:
            return hash(self.coords[0])
        return hash((self.level, self.coords))

    # -- Galois -------------------------------------------------------------

    def galois(self, gamma: int, d: int | None = None) -> "CycNum":
        """Apply zeta_{2^d} -> zeta_{2^d}^gamma (gamma odd)."""
        if gamma % 2 == 0:
            raise ValueError("Galois element must be odd")
        if d is not None and self.level > max(d, 1) and self.level > 1:
            raise ValueError("element lives above the requested level")
        if self.level == 0:
            return self
        n = len(self.coords)
        out = [0] * n
        for k, c in enumerate(self.coords):
            if not c:
                continue
            e = (k * gamma) % (2 * n)
            if e < n:
                out[e] += c
            else:
                out[e - n] -= c
        return CycNum._raw(self.level, tuple(out))

    def conjugate(self) -> "CycNum":
        return self.galois(-1)

    # -- display ------------------------------------------------------------

    def __repr__(self):
        return f"CycNum({self.level}, {self.coords!r})"

    def __str__(self):
        if self.level == 0:
            return str(self.coords[0])
        z = f"z{1 << self.level}"
        parts = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            mon = "" if k == 0 else (z if k == 1 else f"{z}^{k}")
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{c}*{mon}")
        return "(" + " + ".join(parts).replace("+ -", "- ") + ")"


def zeta(d: int, k: int = 1) -> CycNum:
    return CycNum.zeta(d, k)


def galois_apply(gamma: int, x, d: int | None = None):
    """Galois action on scalars; plain rationals are fixed."""
    if gamma % 2 == 0:
        raise ValueError("Galois element must be odd")
    if isinstance(x, CycNum):
        return x.galois(gamma, d)
    return x


def cyc_arith(op: str, x, y=None):
    x = CycNum._lift(x)
    if op == "neg":
        return -x
    if op == "inv":
        return x.inverse()
    y = CycNum._lift(y)
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "eq":
        return x == y
    raise ValueError(f"unknown operation {op!r}")


def inverse(x):
    """Field inverse for rationals or cyclotomic numbers."""
    if isinstance(x, CycNum):
        return x.inverse()
    if not x:
        raise ZeroDivisionError("inverse of zero")
    return Fraction(1) / x
