"""Twisted Laurent polynomials  f = sum a_n tau^n  with tau(z) = z^q.

Multiplication is composition: (f*g)(z) = f(g(z)), with coefficients
c_n = sum_{i+j=n} a_i b_j^(q^i).  Scalars are the tau^0 terms, so the
commutation rule tau a = a^q tau is just a special case of composition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import inf
from typing import Any, Iterable, Mapping, Union

from .errors import FieldMismatchError, PreconditionError
from .fields import FFElem, FiniteField, prime_power
from .puiseux import PuiseuxElem, PuiseuxField

CoeffField = Union[FiniteField, PuiseuxField]
Coeff = Union[FFElem, PuiseuxElem]


def _base_degree(field: CoeffField) -> int:
    return field.base.m if isinstance(field, PuiseuxField) else field.m


@dataclass(frozen=True)
class NormValue:
    """Norm of a twisted polynomial in valuation form (smaller value = larger norm).

    ``value`` is inf over {v(a_n) : n <= 0} and {q^-n v(a_n) : n >= 0};
    ``attained_at`` is the smallest index realising it, ``None`` for f = 0.
    """

    value: Any
    attained_at: int | None


class TwistedPoly:
    """Immutable element of K{tau, tau^-1} acting F_q-linearly by tau(z) = z^q."""

    __slots__ = ("field", "q", "e", "coeffs", "_lifts", "_hash")

    def __init__(self, field: CoeffField, q: int, coeffs: Mapping[int, Any] | None = None):
        p, e = prime_power(q)
        if p != field.p:
            raise FieldMismatchError(f"q={q} is not a power of the characteristic {field.p}")
        if _base_degree(field) % e:
            raise FieldMismatchError(f"F_{q} is not contained in the coefficient field")
        self.field = field
        self.q = q
        self.e = e
        clean = {}
        for n, c in (coeffs or {}).items():
            c = field(c)
            if not c.is_zero():
                clean[int(n)] = c
        self.coeffs: dict[int, Coeff] = dict(sorted(clean.items()))
        self._lifts: dict = {}
        self._hash = None

    # constructors ---------------------------------------------------------
    @classmethod
    def tau(cls, field: CoeffField, q: int, n: int = 1, coeff: Any = 1) -> "TwistedPoly":
        return cls(field, q, {n: coeff})

    @classmethod
    def scalar(cls, field: CoeffField, q: int, c: Any) -> "TwistedPoly":
        return cls(field, q, {0: c})

    @classmethod
    def from_list(cls, field: CoeffField, q: int, coeffs: Iterable[Any], low: int = 0) -> "TwistedPoly":
        return cls(field, q, {low + i: c for i, c in enumerate(coeffs)})

    def _like(self, coeffs: Mapping[int, Any]) -> "TwistedPoly":
        return TwistedPoly(self.field, self.q, coeffs)

    # basic data -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Highest tau-power present (``-inf`` analogue: raises for zero)."""
        if not self.coeffs:
            raise PreconditionError("the zero polynomial has no degree")
        return next(reversed(self.coeffs))

    @property
    def low(self) -> int:
        if not self.coeffs:
            raise PreconditionError("the zero polynomial has no lowest term")
        return next(iter(self.coeffs))

    def __getitem__(self, n: int) -> Coeff:
        c = self.coeffs.get(n)
        return self.field.zero() if c is None else c

    def items(self):
        return self.coeffs.items()

    def twist(self, c: Coeff, n: int) -> Coeff:
        """c^(q^n)."""
        return c.frob(self.e * n)

    def _check(self, other: "TwistedPoly") -> None:
        if not isinstance(other, TwistedPoly):
            raise TypeError(f"expected TwistedPoly, got {type(other).__name__}")
        if other.q != self.q or other.field != self.field:
            raise FieldMismatchError("twisted polynomials over different bases")

    def _as_poly(self, other) -> "TwistedPoly":
        if isinstance(other, TwistedPoly):
            self._check(other)
            return other
        return TwistedPoly.scalar(self.field, self.q, other)

    # ring structure -------------------------------------------------------
    def __add__(self, other) -> "TwistedPoly":
        other = self._as_poly(other)
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            out[n] = out[n] + c if n in out else c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self) -> "TwistedPoly":
        return self._like({n: -c for n, c in self.coeffs.items()})

    def __sub__(self, other) -> "TwistedPoly":
        return self + (-self._as_poly(other))

    def __rsub__(self, other) -> "TwistedPoly":
        return self._as_poly(other) - self

    def compose(self, other) -> "TwistedPoly":
        other = self._as_poly(other)
        out: dict[int, Coeff] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                term = a * self.twist(b, i)
                n = i + j
                out[n] = out[n] + term if n in out else term
        return self._like(out)

    def __mul__(self, other) -> "TwistedPoly":
        return self.compose(other)

    def __rmul__(self, other) -> "TwistedPoly":
        return self._as_poly(other).compose(self)

    def __pow__(self, k: int) -> "TwistedPoly":
        if k < 0:
            if not self.is_unit():
                raise PreconditionError("negative powers need a unit")
            return self.unit_inverse() ** (-k)
        result = TwistedPoly.scalar(self.field, self.q, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwistedPoly):
            return NotImplemented
        return self.q == other.q and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.q, tuple(self.coeffs.items())))
        return self._hash

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for n, c in self.coeffs.items():
            cs = repr(c)
            if " + " in cs:
                cs = f"({cs})"
            if n == 0:
                parts.append(cs)
            else:
                mono = "tau" if n == 1 else f"tau^{n}" if n > 0 else f"tau^({n})"
                parts.append(mono if cs == "1" else f"{cs}*{mono}")
        return " + ".join(parts)

    # adjoint, evaluation, norm -------------------------------------------
    def adjoint(self) -> "TwistedPoly":
        """sum a_n^(1/q^n) tau^-n."""
        return self._like({-n: self.twist(c, -n) for n, c in self.coeffs.items()})

    def change_field(self, target: FiniteField) -> "TwistedPoly":
        """Same polynomial with coefficients pushed into an extension field."""
        if target == self.field:
            return self
        if not isinstance(self.field, FiniteField):
            raise FieldMismatchError("only finite coefficient fields can be extended")
        lifted = self._lifts.get(target)
        if lifted is None:
            lifted = TwistedPoly(target, self.q, {n: c.embed(target) for n, c in self.coeffs.items()})
            self._lifts[target] = lifted
        return lifted

    def __call__(self, x) -> Coeff:
        return evaluate(self, x)

    def norm(self) -> NormValue:
        return norm(self)

    # shape changes --------------------------------------------------------
    def shifted(self, k: int) -> "TwistedPoly":
        """tau^k o f."""
        return self._like({n + k: self.twist(c, k) for n, c in self.coeffs.items()})

    def normalized(self) -> tuple[int, "TwistedPoly"]:
        """``(k, tau^k o f)`` with lowest exponent moved to 0; the kernel is unchanged."""
        k = -self.low
        return k, self.shifted(k)

    def with_q(self, q_new: int) -> "TwistedPoly":
        """Reinterpret an F_{q'}-linear polynomial (q' = q^m) with tau' = tau^m."""
        p, e_new = prime_power(q_new)
        if p != self.field.p or e_new % self.e:
            raise FieldMismatchError(f"{q_new} is not a power of {self.q}")
        m = e_new // self.e
        if any(n % m for n in self.coeffs):
            raise PreconditionError(f"polynomial is not F_{q_new}-linear")
        return TwistedPoly(self.field, q_new, {n // m: c for n, c in self.coeffs.items()})

    def as_q(self, q_small: int) -> "TwistedPoly":
        """Inverse of :meth:`with_q`: view over the smaller field F_{q_small}."""
        p, e_small = prime_power(q_small)
        if p != self.field.p or self.e % e_small:
            raise FieldMismatchError(f"{self.q} is not a power of {q_small}")
        m = self.e // e_small
        return TwistedPoly(self.field, q_small, {n * m: c for n, c in self.coeffs.items()})

    # units and division ---------------------------------------------------
    def is_unit(self) -> bool:
        return is_unit(self)

    def unit_inverse(self) -> "TwistedPoly":
        if not is_unit(self):
            raise PreconditionError("not a unit: units are exactly a*tau^n with a != 0")
        (n, a), = self.coeffs.items()
        return self._like({-n: self.twist(a.inverse(), -n)})

    def remainder_right(self):
        return remainder_right(self)

    def remainder_left(self):
        return remainder_left(self)

    def divmod_right(self, g: "TwistedPoly"):
        return ore_divide_right(self, g)


# -------------------------------------------------------- module functions

def add(f: TwistedPoly, g: TwistedPoly) -> TwistedPoly:
    return f + g


def compose(f: TwistedPoly, g: TwistedPoly) -> TwistedPoly:
    return f.compose(g)


def adjoint(f: TwistedPoly) -> TwistedPoly:
    return f.adjoint()


def evaluate(f: TwistedPoly, x) -> Coeff:
    """sum a_n x^(q^n), exactly; ``x`` may live in a finite extension of the coefficient field."""
    if isinstance(x, int):
        x = f.field(x)
    if isinstance(x, FFElem) and isinstance(f.field, FiniteField) and x.field != f.field:
        f = f.change_field(x.field)
    elif isinstance(x, PuiseuxElem) and x.field != f.field:
        raise FieldMismatchError("Puiseux point over a different base")
    total = x.field.zero() if hasattr(x, "field") else f.field.zero()
    for n, c in f.coeffs.items():
        total = total + c * x.frob(f.e * n)
    return total


def norm(f: TwistedPoly) -> NormValue:
    best, at = inf, None
    for n, c in f.coeffs.items():
        v = c.valuation()
        val = v if n <= 0 else Fraction(v) / Fraction(f.q) ** n
        if val < best:
            best, at = val, n
    return NormValue(best, at)


def remainder_right(f: TwistedPoly) -> tuple[TwistedPoly, Coeff]:
    """``(q_ser, c)`` with f = q_ser o (1 - tau) + c and c = f(1)."""
    c = f.field.zero()
    for a in f.coeffs.values():
        c = c + a
    if f.is_zero():
        return f, c
    lo, hi = min(f.low, 0), max(f.degree, 0)
    running = f.field.zero()
    out = {}
    for n in range(lo, hi):
        running = running + f[n]
        if n == 0:
            running = running - c
        out[n] = running
    return f._like(out), c


def remainder_left(f: TwistedPoly) -> tuple[TwistedPoly, Coeff]:
    """``(q_ser, c)`` with f = (1 - tau) o q_ser + c and c = f*(1)."""
    h, c = remainder_right(f.adjoint())
    minus_tau_inv = TwistedPoly.tau(f.field, f.q, -1, -1)
    return minus_tau_inv * h.adjoint(), c


def ore_divide_right(f: TwistedPoly, g: TwistedPoly) -> tuple[TwistedPoly, TwistedPoly]:
    """Right Euclidean division ``f = h o g + r`` after moving both into K{tau}."""
    f._check(g)
    if g.is_zero():
        raise PreconditionError("division by the zero polynomial")
    n = g.low
    g1 = g.shifted(-n)
    k = max(-f.low, 0) if not f.is_zero() else 0
    r = f.shifted(k)
    d = g1.degree
    lead = g1[d]
    h_terms: dict[int, Coeff] = {}
    while not r.is_zero() and r.degree >= d:
        m = r.degree
        c = r[m] * g1.twist(lead, m - d).inverse()
        h_terms[m - d] = c
        r = r - TwistedPoly.tau(f.field, f.q, m - d, c) * g1
    h1 = f._like(h_terms)
    tau = TwistedPoly.tau
    h = tau(f.field, f.q, -k) * h1 * tau(f.field, f.q, -n)
    return h, tau(f.field, f.q, -k) * r


def is_unit(f: TwistedPoly) -> bool:
    return len(f.coeffs) == 1


def unit_inverse(f: TwistedPoly) -> TwistedPoly:
    return f.unit_inverse()
