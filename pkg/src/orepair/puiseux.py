"""Exact Puiseux-Laurent elements over a finite field: finite sums c * t^e with e in Z[1/p].

This is the perfect valued field used for coefficients when valuations
matter.  Only ring operations, Frobenius powers and their inverses are
provided; division is limited to monomials, which keeps everything exact.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import inf
from typing import Iterable, Mapping

from .errors import FieldMismatchError, PreconditionError
from .fields import FFElem, FiniteField


def split_exponent(e: Fraction, p: int) -> tuple[int, int]:
    """Write ``e = num / p**s`` in lowest terms; returns ``(num, s)``."""
    e = Fraction(e)
    den, s = e.denominator, 0
    while den % p == 0:
        den //= p
        s += 1
    if den != 1:
        raise PreconditionError(f"exponent {e} does not have a power-of-{p} denominator")
    return e.numerator, s


def make_exponent(num: int, pdenom: int, p: int) -> Fraction:
    return Fraction(num, p ** pdenom)


_FIELDS: dict[FiniteField, "PuiseuxField"] = {}
_LOCK = threading.Lock()


class PuiseuxField:
    """F((t^{1/p^inf})) restricted to finite supports, with v(t) = 1."""

    def __new__(cls, base: FiniteField):
        with _LOCK:
            field = _FIELDS.get(base)
            if field is None:
                field = super().__new__(cls)
                field.base = base
                field.p = base.p
                _FIELDS[base] = field
        return field

    def __getnewargs__(self):
        return (self.base,)

    def __repr__(self) -> str:
        return f"PuiseuxField(base={self.base!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PuiseuxField) and other.base == self.base

    def __hash__(self) -> int:
        return hash(("puiseux", self.base))

    def __call__(self, value) -> "PuiseuxElem":
        if isinstance(value, PuiseuxElem):
            if value.field != self:
                raise FieldMismatchError("Puiseux element over a different base")
            return value
        if isinstance(value, (int, FFElem)):
            c = self.base(value)
            return PuiseuxElem(self, {Fraction(0): c})
        if isinstance(value, Mapping):
            return PuiseuxElem(self, {Fraction(k): self.base(v) for k, v in value.items()})
        raise TypeError(f"cannot build a Puiseux element from {value!r}")

    def zero(self) -> "PuiseuxElem":
        return PuiseuxElem(self, {})

    def one(self) -> "PuiseuxElem":
        return self(1)

    def t(self, exponent=1, coeff=1) -> "PuiseuxElem":
        return PuiseuxElem(self, {Fraction(exponent): self.base(coeff)})

    def monomial(self, coeff, exponent) -> "PuiseuxElem":
        return self.t(exponent, coeff)


class PuiseuxElem:
    """Immutable finite sum of monomials; canonical (no zero coefficients)."""

    __slots__ = ("field", "terms", "_hash")

    def __init__(self, field: PuiseuxField, terms: Mapping[Fraction, FFElem] | Iterable):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Fraction, FFElem] = {}
        p = field.p
        for e, c in items:
            e = Fraction(e)
            split_exponent(e, p)
            if c.field != field.base:
                raise FieldMismatchError("coefficient outside the base field")
            if not c.is_zero():
                clean[e] = c
        self.field = field
        self.terms = dict(sorted(clean.items()))
        self._hash = None

    # helpers --------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, PuiseuxElem):
            if other.field != self.field:
                raise FieldMismatchError("Puiseux elements over different bases")
            return other
        if isinstance(other, (int, FFElem)):
            return self.field(other)
        return NotImplemented

    def _combine(self, other, sign: int) -> "PuiseuxElem":
        out = dict(self.terms)
        for e, c in other.terms.items():
            cur = out.get(e)
            if sign < 0:
                c = -c
            out[e] = c if cur is None else cur + c
        return PuiseuxElem(self.field, out)

    # ring ops -------------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._combine(other, -1)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other._combine(self, -1)

    def __neg__(self):
        return PuiseuxElem(self.field, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Fraction, FFElem] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                prod = c1 * c2
                cur = out.get(e)
                out[e] = prod if cur is None else cur + prod
        return PuiseuxElem(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PuiseuxElem":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def frob(self, k: int = 1) -> "PuiseuxElem":
        """x -> x^(p^k) for any integer k; exact because Frobenius is additive."""
        scale = Fraction(self.field.p) ** k
        return PuiseuxElem(self.field, {e * scale: c.frob(k) for e, c in self.terms.items()})

    def pow_qn(self, n: int, q: int) -> "PuiseuxElem":
        """x -> x^(q^n)."""
        from .fields import prime_power

        p, e = prime_power(q)
        if p != self.field.p:
            raise FieldMismatchError("q is not a power of the characteristic")
        return self.frob(e * n)

    def root_qn(self, n: int, q: int) -> "PuiseuxElem":
        return self.pow_qn(-n, q)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def inverse(self) -> "PuiseuxElem":
        if not self.is_monomial():
            raise PreconditionError("only monomials are invertible without truncation")
        (e, c), = self.terms.items()
        return PuiseuxElem(self.field, {-e: c.inverse()})

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    # valuation ------------------------------------------------------------
    def valuation(self):
        return next(iter(self.terms)) if self.terms else inf

    def leading(self) -> tuple[Fraction, FFElem]:
        if not self.terms:
            raise PreconditionError("zero has no leading term")
        return next(iter(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, FFElem)):
            other = self.field(other)
        if not isinstance(other, PuiseuxElem):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self.terms.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms.items():
            coeff = repr(c)
            if e == 0:
                parts.append(coeff)
            else:
                mono = "t" if e == 1 else f"t^({e})"
                parts.append(mono if coeff == "1" else f"({coeff})*{mono}")
        return " + ".join(parts)
