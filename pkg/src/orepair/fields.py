"""Finite fields F_{p^m} as F_p[x]/(modulus), with Frobenius and embeddings.

Elements are immutable and store a read-only numpy coefficient vector
(constant term first).  Fields are interned by ``(p, modulus)`` so the heavy
per-field tables (product reduction, Frobenius powers) are built once.
"""

from __future__ import annotations

import itertools
import random
import threading
from fractions import Fraction
from math import inf
from typing import Iterator, Sequence

import numpy as np

from .errors import FieldMismatchError, InvariantError, PreconditionError
from .linalg import matpow_mod, nullspace_mod, solve_mod

# Conway polynomials, constant term first.
CONWAY: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (3, 7): (1, 0, 2, 0, 0, 0, 0, 1),
    (3, 8): (2, 2, 2, 0, 1, 2, 0, 0, 1),
    (3, 9): (1, 1, 2, 2, 0, 0, 0, 0, 0, 1),
    (3, 10): (2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1),
    (3, 11): (1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 12): (2, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (5, 5): (3, 4, 0, 0, 0, 1),
    (5, 6): (2, 0, 1, 4, 1, 0, 1),
    (5, 7): (3, 3, 0, 0, 0, 0, 0, 1),
    (5, 8): (2, 4, 3, 0, 1, 0, 0, 0, 1),
    (5, 9): (3, 1, 0, 2, 0, 0, 0, 0, 0, 1),
    (5, 10): (2, 1, 4, 2, 3, 3, 0, 0, 0, 0, 1),
    (5, 11): (3, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (5, 12): (2, 2, 3, 4, 4, 0, 1, 1, 0, 0, 0, 0, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n ** 0.5) + 1))


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q = p**e``."""
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1:
                raise PreconditionError(f"{q} is not a prime power")
            return p, e
    raise PreconditionError(f"{q} is not a prime power")


# ------------------------------------------------------- F_p[x] polynomials

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    quot = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = (a[-1] * inv) % p
        shift = len(a) - len(b)
        quot[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return quot, a


def poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    while b:
        a, b = b, poly_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [(x * inv) % p for x in a]
    return a


def poly_inverse_mod(a: Sequence[int], modulus: Sequence[int], p: int) -> list[int]:
    """Inverse of ``a`` modulo an irreducible ``modulus`` (extended Euclid)."""
    r0, r1 = _trim([x % p for x in modulus]), _trim([x % p for x in a])
    s0, s1 = [], [1]
    if not r1:
        raise ZeroDivisionError("inverse of zero")
    while len(r1) > 1:
        quo, rem = poly_divmod(r0, r1, p)
        prod = _poly_mul(quo, s1, p)
        s_new = [(x - y) % p for x, y in itertools.zip_longest(s0, prod, fillvalue=0)]
        r0, r1 = r1, rem
        s0, s1 = s1, _trim(s_new)
        if not r1:
            raise InvariantError("modulus is not irreducible")
    inv = pow(r1[0], -1, p)
    return [(x * inv) % p for x in s1]


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    return [int(x) % p for x in np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))]


class _QuotientRing:
    """Arithmetic in F_p[x]/(modulus) on coefficient vectors; modulus need not be irreducible."""

    def __init__(self, modulus: Sequence[int], p: int):
        self.p = p
        self.modulus = tuple(int(c) % p for c in modulus)
        m = len(self.modulus) - 1
        if m < 1 or self.modulus[-1] != 1:
            raise PreconditionError("modulus must be monic of degree >= 1")
        self.m = m
        red = np.zeros((max(m - 1, 0), m), dtype=np.int64)
        row = np.array([(-c) % p for c in self.modulus[:m]], dtype=np.int64)  # x^m
        x_m = row.copy()
        for k in range(m - 1):
            red[k] = row
            # x^(m+k+1) = x * x^(m+k), folding the overflow back through x^m
            top = row[-1]
            row = (np.concatenate(([0], row[:-1])) + top * x_m) % p
        self.red = red
        self.x_m = x_m

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        prod = np.convolve(a, b) % self.p
        m = self.m
        if len(prod) <= m:
            out = np.zeros(m, dtype=np.int64)
            out[: len(prod)] = prod
            return out
        return (prod[:m] + prod[m:] @ self.red[: len(prod) - m]) % self.p

    def pow(self, a: np.ndarray, n: int) -> np.ndarray:
        result = np.zeros(self.m, dtype=np.int64)
        result[0] = 1
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def x(self) -> np.ndarray:
        v = np.zeros(self.m, dtype=np.int64)
        if self.m == 1:
            v[0] = (-self.modulus[0]) % self.p
        else:
            v[1] = 1
        return v


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Rabin's test, with a few Ben-Or gcds first for fast rejection of random candidates."""
    poly = _trim([int(c) % p for c in modulus])
    n = len(poly) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if poly[0] == 0:
        return False
    ring = _QuotientRing([c * pow(poly[-1], -1, p) % p for c in poly], p)
    x = ring.x()
    h = x
    checkpoints = {n // r for r in prime_factors(n)}
    for i in range(1, n + 1):
        h = ring.pow(h, p)
        if i in checkpoints or (i <= min(6, n // 2)):
            diff = [(int(a) - int(b)) % p for a, b in zip(h, x)]
            g = poly_gcd(diff, poly, p)
            if len(g) > 1:
                return False
    return bool(np.array_equal(h, x))


def first_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Deterministic irreducible: smallest lower-coefficient integer encoding, low-first."""
    for c in itertools.count(1):
        digits, r = [], c
        for _ in range(m):
            digits.append(r % p)
            r //= p
        if r:
            break
        if digits[0] == 0:
            continue
        cand = tuple(digits) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise InvariantError(f"no irreducible polynomial of degree {m} over F_{p}")


# ------------------------------------------------------------------- fields

_REGISTRY: dict[tuple[int, tuple[int, ...]], "FiniteField"] = {}
_LOCK = threading.RLock()


class FiniteField:
    """The field F_p[x]/(modulus) of order p**m."""

    def __new__(cls, p: int, m: int | None = None, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise PreconditionError(f"p={p} is not prime")
        if modulus is None:
            if m is None:
                raise PreconditionError("either m or modulus is required")
            modulus = CONWAY.get((p, m))
            if modulus is None:
                modulus = first_irreducible(p, m)
        modulus = tuple(int(c) % p for c in modulus)
        if m is not None and len(modulus) - 1 != m:
            raise PreconditionError(f"modulus has degree {len(modulus) - 1}, expected {m}")
        if modulus[-1] != 1:
            raise PreconditionError("modulus must be monic")
        key = (p, modulus)
        with _LOCK:
            field = _REGISTRY.get(key)
            if field is None:
                if not is_irreducible(modulus, p):
                    raise PreconditionError(f"modulus {list(modulus)} is reducible over F_{p}")
                field = super().__new__(cls)
                field._setup(p, modulus)
                _REGISTRY[key] = field
        return field

    def __getnewargs__(self):
        return (self.p, self.m, self.modulus)

    def _setup(self, p: int, modulus: tuple[int, ...]) -> None:
        self.p = p
        self.modulus = modulus
        self.m = len(modulus) - 1
        self.order = p ** self.m
        self._ring = _QuotientRing(modulus, p)
        self._frob: dict[int, np.ndarray] = {}
        self._subfield: dict[int, list[FFElem]] = {}

    # identity -----------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        return self is other or (
            isinstance(other, FiniteField) and (self.p, self.modulus) == (other.p, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    # constructors ---------------------------------------------------------
    def __call__(self, value: int | Sequence[int] | "FFElem") -> "FFElem":
        if isinstance(value, FFElem):
            if value.field != self:
                return value.embed(self)
            return value
        if isinstance(value, (int, np.integer)):
            vec = np.zeros(self.m, dtype=np.int64)
            vec[0] = int(value) % self.p
            return FFElem(self, vec)
        vec = [int(c) % self.p for c in value]
        if len(vec) > self.m:
            raise PreconditionError(f"too many coefficients for a degree-{self.m} field")
        vec += [0] * (self.m - len(vec))
        return FFElem(self, np.asarray(vec, dtype=np.int64))

    def zero(self) -> "FFElem":
        return self(0)

    def one(self) -> "FFElem":
        return self(1)

    def gen(self) -> "FFElem":
        """The class of x, a root of the modulus."""
        return FFElem(self, self._ring.x())

    def elements(self) -> Iterator["FFElem"]:
        for digits in itertools.product(range(self.p), repeat=self.m):
            yield FFElem(self, np.asarray(digits[::-1], dtype=np.int64))

    def random_element(self, rng: random.Random, nonzero: bool = False) -> "FFElem":
        while True:
            x = FFElem(self, np.asarray([rng.randrange(self.p) for _ in range(self.m)], dtype=np.int64))
            if not nonzero or not x.is_zero():
                return x

    # Frobenius ------------------------------------------------------------
    def frobenius_matrix(self, k: int = 1) -> np.ndarray:
        """Matrix over F_p of x -> x^(p^k), acting on column coefficient vectors."""
        k %= self.m
        mat = self._frob.get(k)
        if mat is None:
            if k == 0:
                mat = np.eye(self.m, dtype=np.int64)
            elif k == 1:
                xp = self._ring.pow(self._ring.x(), self.p)
                cols = [np.eye(self.m, dtype=np.int64)[0]]
                for _ in range(1, self.m):
                    cols.append(self._ring.mul(cols[-1], xp))
                mat = np.stack(cols, axis=1) % self.p
            else:
                mat = matpow_mod(self.frobenius_matrix(1), k, self.p)
            mat.flags.writeable = False
            self._frob[k] = mat
        return mat

    def multiplication_matrix(self, a: "FFElem") -> np.ndarray:
        """Matrix over F_p of y -> a*y."""
        p, m = self.p, self.m
        out = np.empty((m, m), dtype=np.int64)
        col = a.vec.copy()
        x_m = self._ring.x_m
        for j in range(m):
            out[:, j] = col
            # multiply the running column by x
            top = col[-1]
            col = np.concatenate(([0], col[:-1])) if m > 1 else np.zeros(1, dtype=np.int64)
            col = (col + top * x_m) % p
        return out

    # subfields ------------------------------------------------------------
    def subfield_basis(self, k: int) -> list["FFElem"]:
        """An F_p-basis of the unique subfield of order p**k."""
        if self.m % k:
            raise FieldMismatchError(f"F_{self.p}^{k} is not a subfield of F_{self.p}^{self.m}")
        basis = self._subfield.get(k)
        if basis is None:
            mat = (self.frobenius_matrix(k) - np.eye(self.m, dtype=np.int64)) % self.p
            ns = nullspace_mod(mat, self.p)
            if ns.shape[0] != k:
                raise InvariantError("subfield has the wrong dimension")
            basis = [FFElem(self, row) for row in ns]
            self._subfield[k] = basis
        return basis

    def subfield_elements(self, k: int) -> list["FFElem"]:
        basis = self.subfield_basis(k)
        out = []
        for digits in itertools.product(range(self.p), repeat=k):
            vec = sum((d * b.vec for d, b in zip(digits, basis)), np.zeros(self.m, dtype=np.int64))
            out.append(FFElem(self, vec % self.p))
        return out

    def contains_subfield(self, k: int) -> bool:
        return self.m % k == 0


class FFElem:
    """An element of a :class:`FiniteField`."""

    __slots__ = ("field", "vec", "_hash")

    def __init__(self, field: FiniteField, vec: np.ndarray):
        vec = np.asarray(vec, dtype=np.int64)
        vec.flags.writeable = False
        self.field = field
        self.vec = vec
        self._hash = None

    def _coerce(self, other) -> "FFElem":
        if isinstance(other, FFElem):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, np.integer)):
            return self.field(int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FFElem(self.field, (self.vec + other.vec) % self.field.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FFElem(self.field, (self.vec - other.vec) % self.field.p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return FFElem(self.field, (-self.vec) % self.field.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FFElem(self.field, self.field._ring.mul(self.vec, other.vec))

    __rmul__ = __mul__

    def inverse(self) -> "FFElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a finite field")
        f = self.field
        if f.m == 1:
            return f(pow(int(self.vec[0]), -1, f.p))
        inv = poly_inverse_mod(self.vec.tolist(), f.modulus, f.p)
        return f(inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int) -> "FFElem":
        if n < 0:
            return self.inverse() ** (-n)
        return FFElem(self.field, self.field._ring.pow(self.vec, n))

    def frob(self, k: int = 1) -> "FFElem":
        """x -> x^(p^k); negative k gives the unique p^|k|-th root."""
        if k % self.field.m == 0:
            return self
        mat = self.field.frobenius_matrix(k)
        return FFElem(self.field, (mat @ self.vec) % self.field.p)

    def is_zero(self) -> bool:
        return not self.vec.any()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def valuation(self):
        """Trivial valuation: 0 on units, +inf at zero."""
        return inf if self.is_zero() else Fraction(0)

    def in_subfield(self, k: int) -> bool:
        return self.frob(k) == self

    def trace(self, k: int = 1, over: int | None = None) -> "FFElem":
        """Trace to the subfield of order p**k, from the subfield of order p**over (default: whole field)."""
        top = self.field.m if over is None else over
        if top % k:
            raise FieldMismatchError("trace degree must divide the field degree")
        total = self.field.zero()
        y = self
        for _ in range(top // k):
            total = total + y
            y = y.frob(k)
        return total

    def embed(self, target: FiniteField) -> "FFElem":
        if target == self.field:
            return self
        mat = embedding_matrix(self.field, target)
        return FFElem(target, (mat @ self.vec) % target.p)

    def to_list(self) -> list[int]:
        return [int(c) for c in self.vec]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, np.integer)):
            other = self.field(int(other))
        if not isinstance(other, FFElem):
            return NotImplemented
        return self.field == other.field and bool(np.array_equal(self.vec, other.vec))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field.p, self.field.modulus, self.vec.tobytes()))
        return self._hash

    def sort_key(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.vec[::-1])

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.vec.tolist()):
            if not c:
                continue
            mono = "" if i == 0 else ("w" if i == 1 else f"w^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(reversed(terms)) if terms else "0"


# -------------------------------------------------------------- embeddings

_EMBEDDINGS: dict[tuple[FiniteField, FiniteField], np.ndarray] = {}


def _find_root(source: FiniteField, target: FiniteField) -> FFElem:
    if source.m == 1:
        return target((-source.modulus[0]) % source.p)
    if CONWAY.get((source.p, source.m)) == source.modulus and CONWAY.get((target.p, target.m)) == target.modulus:
        # Conway polynomials are norm-compatible, which fixes a canonical embedding.
        return target.gen() ** ((target.order - 1) // (source.order - 1))
    basis = target.subfield_basis(source.m)
    coeffs = source.modulus
    for digits in itertools.product(range(target.p), repeat=source.m):
        if not any(digits):
            continue
        cand = target.zero()
        for d, b in zip(digits, basis):
            if d:
                cand = cand + b * d
        acc = target.zero()
        for c in reversed(coeffs):
            acc = acc * cand + c
        if acc.is_zero():
            return cand
    raise InvariantError(f"no root of {list(coeffs)} in {target}")


def embedding_matrix(source: FiniteField, target: FiniteField) -> np.ndarray:
    """F_p-matrix of the chosen embedding ``source -> target``.

    Embeddings are chosen once and cached; if a chain ``source -> mid -> target``
    is already cached, the composite is reused so chains commute.
    """
    if source.p != target.p:
        raise FieldMismatchError("different characteristics")
    if target.m % source.m:
        raise FieldMismatchError(f"degree {source.m} does not divide {target.m}")
    key = (source, target)
    with _LOCK:
        mat = _EMBEDDINGS.get(key)
        if mat is not None:
            return mat
        for (s, mid), first in list(_EMBEDDINGS.items()):
            if s == source and (mid, target) in _EMBEDDINGS:
                mat = (_EMBEDDINGS[(mid, target)] @ first) % source.p
                break
        else:
            if source == target:
                mat = np.eye(source.m, dtype=np.int64)
            else:
                root = _find_root(source, target)
                cols, power = [], target.one()
                for _ in range(source.m):
                    cols.append(power.vec)
                    power = power * root
                mat = np.stack(cols, axis=1) % source.p
        mat.flags.writeable = False
        _EMBEDDINGS[key] = mat
        return mat


def embed(x: FFElem, target: FiniteField) -> FFElem:
    return x.embed(target)


def restrict(x: FFElem, small: FiniteField) -> FFElem:
    """Preimage of ``x`` under the chosen embedding ``small -> x.field``."""
    mat = embedding_matrix(small, x.field)
    sol = solve_mod(mat, x.vec, small.p)
    if sol is None:
        raise PreconditionError(f"{x!r} does not lie in the image of {small}")
    return FFElem(small, sol)


def extension_field(base: FiniteField, degree: int) -> FiniteField:
    """Field of degree ``base.m * degree`` over F_p, with ``base`` embedded compatibly."""
    return FiniteField(base.p, base.m * degree)
