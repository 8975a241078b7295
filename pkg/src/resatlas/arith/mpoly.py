"""Sparse multivariate polynomials over Z, Q or Q(zeta_{2^d}).

Exponent vectors are packed into a single integer (16 bits per variable) so that
multiplying monomials is one integer addition.  Coefficients may be ints,
Fractions or CycNum values; zero coefficients are never stored.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .cyclotomic import CycNum

_BITS = 16
_MASK = (1 << _BITS) - 1


def _pack(exps: Sequence[int]) -> int:
    key = 0
    for k, e in enumerate(exps):
        if e < 0 or e > _MASK:
            raise ValueError(f"exponent {e} out of range")
        key |= e << (_BITS * k)
    return key


def _unpack(key: int, n: int) -> tuple[int, ...]:
    return tuple((key >> (_BITS * k)) & _MASK for k in range(n))


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, CycNum))


class MPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[int, object] | None = None):
        self.vars = tuple(variables)
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    # -- constructors -------------------------------------------------------

    @classmethod
    def gens(cls, variables: Sequence[str]) -> list["MPoly"]:
        variables = tuple(variables)
        return [cls(variables, {1 << (_BITS * k): 1}) for k in range(len(variables))]

    @classmethod
    def const(cls, variables: Sequence[str], c) -> "MPoly":
        return cls(variables, {0: c})

    @classmethod
    def from_terms(cls, variables: Sequence[str], items: Iterable[tuple[Sequence[int], object]]) -> "MPoly":
        out: dict[int, object] = {}
        for exps, c in items:
            k = _pack(exps)
            out[k] = out.get(k, 0) + c
        return cls(variables, out)

    def _coerce(self, other) -> "MPoly | None":
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if _is_scalar(other):
            return MPoly(self.vars, {0: other})
        return None

    # -- ring operations ----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if _is_scalar(other):
            if not other:
                return not self.terms
            return len(self.terms) == 1 and self.terms.get(0) == other
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __add__(self, other):
        if _is_scalar(other):
            if not other:
                return self
            out = dict(self.terms)
            out[0] = out.get(0, 0) + other
            return MPoly(self.vars, out)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            out[k] = c if v is None else v + c
        return MPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if _is_scalar(other):
            return self + (-other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            if not other:
                return MPoly(self.vars)
            return MPoly(self.vars, {k: c * other for k, c in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, object] = {}
        get = out.get
        for k2, c2 in b.items():
            for k1, c1 in a.items():
                k = k1 + k2
                v = get(k)
                out[k] = c1 * c2 if v is None else v + c1 * c2
        return MPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly(self.vars, {0: 1})
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- inspection ---------------------------------------------------------

    def items(self):
        """(exponent tuple, coefficient) pairs in canonical order."""
        n = len(self.vars)
        pairs = [(_unpack(k, n), c) for k, c in self.terms.items()]
        pairs.sort(key=lambda p: (-sum(p[0]), p[0]))
        return pairs

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    def constant_term(self):
        return self.terms.get(0, 0)

    def total_degree(self) -> int:
        n = len(self.vars)
        return max((sum(_unpack(k, n)) for k in self.terms), default=-1)

    def degrees(self, names: Sequence[str]) -> set[int]:
        """Set of total degrees in the given subset of variables, over all terms."""
        idx = [self.vars.index(v) for v in names]
        n = len(self.vars)
        out = set()
        for k in self.terms:
            e = _unpack(k, n)
            out.add(sum(e[i] for i in idx))
        return out

    def is_homogeneous(self, names: Sequence[str] | None = None) -> bool:
        names = self.vars if names is None else names
        return len(self.degrees(names)) <= 1

    def degree_in(self, name: str) -> int:
        i = self.vars.index(name)
        return max(((k >> (_BITS * i)) & _MASK for k in self.terms), default=-1)

    def coeff_in(self, name: str) -> dict[int, "MPoly"]:
        """Split by powers of one variable: {power: coefficient polynomial}."""
        i = self.vars.index(name)
        shift = _BITS * i
        out: dict[int, dict] = {}
        for k, c in self.terms.items():
            e = (k >> shift) & _MASK
            out.setdefault(e, {})[k - (e << shift)] = c
        return {e: MPoly(self.vars, t) for e, t in sorted(out.items())}

    def coefficient(self, monomial: Mapping[str, int]):
        """Scalar coefficient of a single monomial."""
        exps = [monomial.get(v, 0) for v in self.vars]
        return self.terms.get(_pack(exps), 0)

    def variables_used(self) -> set[str]:
        n = len(self.vars)
        used = set()
        for k in self.terms:
            for v, e in zip(self.vars, _unpack(k, n)):
                if e:
                    used.add(v)
        return used

    # -- substitution -------------------------------------------------------

    def subs(self, mapping: Mapping[str, object], variables: Sequence[str] | None = None):
        """Substitute variables by polynomials or scalars.

        Unmapped variables must exist in the target ring (``variables``, by
        default the current one).  Returns an MPoly in the target ring, or a
        scalar if the target ring has no variables.
        """
        target = tuple(self.vars if variables is None else variables)
        gens = dict(zip(target, MPoly.gens(target)))
        images = []
        for v in self.vars:
            if v in mapping:
                images.append(mapping[v])
            elif v in gens:
                images.append(gens[v])
            else:
                raise ValueError(f"no image for variable {v}")
        n = len(self.vars)
        cache: list[dict[int, object]] = [{0: 1} for _ in range(n)]

        def power(i, e):
            c = cache[i]
            if e not in c:
                c[e] = images[i] ** e if isinstance(images[i], MPoly) else images[i] ** e
            return c[e]

        total = MPoly(target)
        for k, coef in self.terms.items():
            term = coef
            for i, e in enumerate(_unpack(k, n)):
                if e:
                    p = power(i, e)
                    if not isinstance(term, MPoly) and isinstance(p, MPoly):
                        term = p * term
                    else:
                        term = term * p
            total = total + term
        if not target:
            return total.constant_term()
        return total

    def evaluate(self, values: Mapping[str, object]):
        """Full evaluation to a scalar."""
        missing = [v for v in self.variables_used() if v not in values]
        if missing:
            raise ValueError(f"missing values for {missing}")
        n = len(self.vars)
        total = 0
        for k, coef in self.terms.items():
            term = coef
            for v, e in zip(self.vars, _unpack(k, n)):
                if e:
                    term = term * values[v] ** e
            total = total + term
        return total

    def map_coeffs(self, fn) -> "MPoly":
        return MPoly(self.vars, {k: fn(c) for k, c in self.terms.items()})

    def with_vars(self, variables: Sequence[str]) -> "MPoly":
        """Re-express in a ring whose variable list contains all used variables."""
        variables = tuple(variables)
        if variables == self.vars:
            return self
        n = len(self.vars)
        pos = {v: i for i, v in enumerate(variables)}
        out = {}
        for k, c in self.terms.items():
            exps = [0] * len(variables)
            for v, e in zip(self.vars, _unpack(k, n)):
                if e:
                    if v not in pos:
                        raise ValueError(f"variable {v} missing from target ring")
                    exps[pos[v]] = e
            out[_pack(exps)] = c
        return MPoly(variables, out)

    # -- display ------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.items():
            mon = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.vars, exps) if e
            )
            neg = False
            if isinstance(c, CycNum):
                if c.is_rational():
                    c = c.to_rational()
            if isinstance(c, (int, Fraction)):
                neg = c < 0
                mag = -c if neg else c
                cs = str(mag)
            else:
                cs = str(c)
                mag = None
            if not mon:
                body = cs
            elif mag == 1:
                body = mon
            else:
                body = f"{cs}*{mon}"
            pieces.append((neg, body))
        head_neg, head = pieces[0]
        out = ("-" if head_neg else "") + head
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"MPoly({self.vars!r}, {str(self)!r})"
