"""Drinfeld F_q[t]-modules over finite fields, their torsion, and the torsion pairing.

A module is fixed by phi_t = theta + g_1 tau + ... + g_r tau^r over L.  For
a in A = F_q[t], phi_a is obtained by Horner's rule in the twisted ring.  The
pairing [alpha, beta]_a sends b in A/a to <phi_b(alpha), beta>_{phi_a}; we
report it in coordinates for the monomial basis 1, t, ..., t^(deg a - 1) of A/a.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import linalg
from .errors import FieldMismatchError, PreconditionError
from .fields import FFElem, FiniteField, prime_power
from .kernels import (
    DEFAULT_MAX_EXTENSION,
    KernelBasis,
    KernelPairing,
    ambient_for,
    kernel_basis,
    pairing_values,
)
from .reports import CheckReport
from .twisted import TwistedPoly


# ------------------------------------------------------------ A = F_q[t]

class APoly:
    """Element of F_q[t]; coefficients (low degree first) live in the standalone field F_q."""

    __slots__ = ("fq", "coeffs")

    def __init__(self, fq: FiniteField, coeffs: Iterable):
        cs = [fq(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.fq = fq
        self.coeffs: tuple[FFElem, ...] = tuple(cs)

    @classmethod
    def t_power(cls, fq: FiniteField, n: int) -> "APoly":
        return cls(fq, [0] * n + [1])

    @classmethod
    def constant(cls, fq: FiniteField, c) -> "APoly":
        return cls(fq, [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def _like(self, cs) -> "APoly":
        return APoly(self.fq, cs)

    def _coerce(self, other) -> "APoly":
        if isinstance(other, APoly):
            if other.fq != self.fq:
                raise FieldMismatchError("polynomials over different F_q")
            return other
        return APoly.constant(self.fq, other)

    def __add__(self, other) -> "APoly":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        zero = self.fq.zero()
        return self._like(
            (self.coeffs[i] if i < len(self.coeffs) else zero)
            + (other.coeffs[i] if i < len(other.coeffs) else zero)
            for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self) -> "APoly":
        return self._like(-c for c in self.coeffs)

    def __sub__(self, other) -> "APoly":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "APoly":
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return self._like([])
        out = [self.fq.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "APoly":
        result = APoly.constant(self.fq, 1)
        for _ in range(n):
            result = result * self
        return result

    def divmod(self, other: "APoly") -> tuple["APoly", "APoly"]:
        other = self._coerce(other)
        if other.is_zero():
            raise PreconditionError("division by zero in F_q[t]")
        rem = list(self.coeffs)
        quo = [self.fq.zero()] * max(len(rem) - other.degree, 0)
        lead_inv = other.coeffs[-1].inverse()
        while len(rem) > other.degree and rem:
            shift = len(rem) - 1 - other.degree
            c = rem[-1] * lead_inv
            quo[shift] = c
            for i, b in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - c * b
            while rem and rem[-1].is_zero():
                rem.pop()
        return self._like(quo), self._like(rem)

    def __mod__(self, other) -> "APoly":
        return self.divmod(other)[1]

    def monic(self) -> "APoly":
        if self.is_zero():
            return self
        inv = self.coeffs[-1].inverse()
        return self._like(c * inv for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, APoly):
            return NotImplemented
        return self.fq == other.fq and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            cs = repr(c)
            cs = f"({cs})" if " + " in cs else cs
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            parts.append(cs if not mono else (mono if cs == "1" else f"{cs}*{mono}"))
        return " + ".join(reversed(parts))

    def evaluate(self, x: FFElem) -> FFElem:
        """a(x) for x in a finite field containing F_q."""
        acc = x.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c.embed(x.field)
        return acc

    def to_json(self):
        return [int(c.vec[0]) if self.fq.m == 1 else c.to_list() for c in self.coeffs]


def a_gcd(a: APoly, b: APoly) -> APoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def all_apolys(fq: FiniteField, max_degree: int) -> list[APoly]:
    """Every polynomial of degree <= max_degree (including 0)."""
    elems = list(fq.elements())
    return [APoly(fq, cs) for cs in itertools.product(elems, repeat=max_degree + 1)]


# ------------------------------------------------------------ the module

@dataclass(frozen=True)
class DrinfeldModule:
    """phi: F_q[t] -> L{tau} with phi_t = theta + g_1 tau + ... + g_r tau^r."""

    phi_t: TwistedPoly

    def __post_init__(self):
        f = self.phi_t
        if not isinstance(f.field, FiniteField):
            raise PreconditionError("Drinfeld modules are supported over finite fields only")
        if f.is_zero() or f.low < 0:
            raise PreconditionError("phi_t must lie in L{tau}")
        if f.degree < 1:
            raise PreconditionError("phi_t must have rank >= 1")

    @classmethod
    def from_coeffs(cls, L: FiniteField, q: int, coeffs: Sequence) -> "DrinfeldModule":
        return cls(TwistedPoly.from_list(L, q, coeffs))

    @property
    def L(self) -> FiniteField:
        return self.phi_t.field

    @property
    def q(self) -> int:
        return self.phi_t.q

    @property
    def fq(self) -> FiniteField:
        p, e = prime_power(self.q)
        return FiniteField(p, e)

    @property
    def theta(self) -> FFElem:
        return self.phi_t[0]

    @property
    def rank(self) -> int:
        return self.phi_t.degree

    def apoly(self, coeffs) -> APoly:
        return APoly(self.fq, coeffs)

    def t(self) -> APoly:
        return APoly.t_power(self.fq, 1)

    def characteristic(self) -> APoly:
        """Minimal polynomial of theta over F_q."""
        theta = self.theta
        e = self.phi_t.e
        conj = [theta]
        while True:
            nxt = conj[-1].frob(e)
            if nxt == theta:
                break
            conj.append(nxt)
        L = self.L
        poly = [L.one()]
        for r in conj:
            new = [L.zero()] * (len(poly) + 1)
            for i, c in enumerate(poly):
                new[i + 1] = new[i + 1] + c
                new[i] = new[i] - c * r
            poly = new
        from .fields import restrict

        return APoly(self.fq, [restrict(c, self.fq) for c in poly])

    def phi(self, a: APoly) -> TwistedPoly:
        return phi_of(self, a)

    def is_coprime(self, a: APoly) -> bool:
        return a_gcd(a, self.characteristic()).degree == 0


def phi_of(phi: DrinfeldModule, a: APoly) -> TwistedPoly:
    """phi_a = sum c_i phi_t^i by Horner's rule."""
    L, q = phi.L, phi.q
    result = TwistedPoly(L, q, {})
    for c in reversed(a.coeffs):
        result = result * phi.phi_t + TwistedPoly.scalar(L, q, c.embed(L))
    return result


def characteristic(phi: DrinfeldModule) -> APoly:
    return phi.characteristic()


# ------------------------------------------------------------ torsion

@dataclass
class TorsionModule:
    """phi[a] (or phi*[a]) with its F_q-basis and the matrix of the t-action."""

    a: APoly
    basis: KernelBasis
    action: list[list[FFElem]]
    adjoint: bool = False

    @property
    def dim(self) -> int:
        return self.basis.dim

    def size(self) -> int:
        return self.basis.size()

    def elements(self):
        return self.basis.elements()

    def charpoly(self) -> list[FFElem]:
        ambient = self.basis.ambient
        return linalg.charpoly(self.action, ambient.zero(), ambient.one())

    def a_of_action(self) -> list[list[FFElem]]:
        ambient = self.basis.ambient
        d = self.dim
        zero, one = ambient.zero(), ambient.one()
        result = [[zero] * d for _ in range(d)]
        ident = [[one if i == j else zero for j in range(d)] for i in range(d)]
        for c in reversed(self.a.coeffs):
            result = _matmul(result, self.action, zero)
            ce = c.embed(ambient)
            result = [[result[i][j] + ce * ident[i][j] for j in range(d)] for i in range(d)]
        return result

    def is_free(self, rank: int) -> bool:
        """For squarefree a: charpoly of t equals a^rank and a(t) = 0 on the module."""
        ambient = self.basis.ambient
        target = self.a.monic() ** rank
        cp = self.charpoly()
        want = [c.embed(ambient) for c in target.coeffs]
        if cp != want:
            return False
        return all(x.is_zero() for row in self.a_of_action() for x in row)


def _matmul(a, b, zero):
    n = len(a)
    if n == 0:
        return []
    return [[sum((a[i][k] * b[k][j] for k in range(n)), zero) for j in range(n)] for i in range(n)]


def _action_matrix(op: TwistedPoly, basis: KernelBasis) -> list[list[FFElem]]:
    """Column j holds the coordinates of op(basis_j)."""
    d = basis.dim
    cols = [basis.coordinates(op(z)) for z in basis.basis]
    return [[cols[j][i] for j in range(d)] for i in range(d)]


def _check_torsion_pre(phi: DrinfeldModule, a: APoly) -> None:
    if a.is_zero():
        raise PreconditionError("a must be nonzero")
    if not phi.is_coprime(a):
        raise PreconditionError(f"a = {a!r} shares a factor with the characteristic")


def torsion_ambient(phi: DrinfeldModule, a: APoly, max_extension: int = DEFAULT_MAX_EXTENSION) -> FiniteField:
    """One field holding phi[a] and phi*[a]."""
    fa = phi_of(phi, a)
    return ambient_for(fa, fa.adjoint(), max_extension=max_extension)


def torsion(phi: DrinfeldModule, a: APoly, ambient: FiniteField | None = None,
            max_extension: int = DEFAULT_MAX_EXTENSION) -> TorsionModule:
    _check_torsion_pre(phi, a)
    fa = phi_of(phi, a)
    basis = kernel_basis(fa, ambient, max_extension)
    return TorsionModule(a, basis, _action_matrix(phi.phi_t.change_field(basis.ambient), basis))


def adjoint_torsion(phi: DrinfeldModule, a: APoly, ambient: FiniteField | None = None,
                    max_extension: int = DEFAULT_MAX_EXTENSION) -> TorsionModule:
    _check_torsion_pre(phi, a)
    fa = phi_of(phi, a).adjoint()
    basis = kernel_basis(fa, ambient, max_extension)
    op = phi.phi_t.adjoint().change_field(basis.ambient)
    return TorsionModule(a, basis, _action_matrix(op, basis), adjoint=True)


# ------------------------------------------------------------ pairing

class WeilPairing:
    """[alpha, beta]_a as the vector of values on 1, t, ..., t^(deg a - 1)."""

    def __init__(self, phi: DrinfeldModule, a: APoly, ambient: FiniteField):
        _check_torsion_pre(phi, a)
        self.phi = phi
        self.a = a
        self.ambient = ambient
        self.pairing = KernelPairing(phi_of(phi, a), ambient)
        self._phi_b = {}

    def phi_b(self, b: APoly) -> TwistedPoly:
        op = self._phi_b.get(b)
        if op is None:
            op = phi_of(self.phi, b).change_field(self.ambient)
            self._phi_b[b] = op
        return op

    def value(self, alpha: FFElem, beta: FFElem, b: APoly) -> FFElem:
        """[alpha, beta]_a(b) = <phi_b(alpha), beta>_{phi_a}."""
        if not self.pairing.f(alpha).is_zero():
            raise PreconditionError(f"{alpha!r} is not in phi[a]")
        return self.pairing(self.phi_b(b)(alpha), beta)

    def __call__(self, alpha: FFElem, beta: FFElem) -> list[FFElem]:
        fq = self.phi.fq
        return [self.value(alpha, beta, APoly.t_power(fq, i)) for i in range(self.a.degree)]

    def table(self, alphas: Sequence[FFElem], betas: Sequence[FFElem], b: APoly) -> list[list[FFElem]]:
        """[alpha, beta]_a(b) over all pairs, batched."""
        op = self.phi_b(b)
        moved = [op(x) for x in alphas]
        return pairing_values(self.pairing, moved, betas)


def weil_pair(phi: DrinfeldModule, a: APoly, alpha: FFElem, beta: FFElem) -> list[FFElem]:
    if alpha.field != beta.field:
        raise FieldMismatchError("alpha and beta must share a field")
    return WeilPairing(phi, a, alpha.field)(alpha, beta)


@dataclass
class DrinfeldPairingResult:
    phi: DrinfeldModule
    a: APoly
    tors: TorsionModule
    dual: TorsionModule
    gram: list[list[list[FFElem]]]
    """gram[i][j][k] = [alpha_i, beta_j]_a(t^k)."""
    report: CheckReport = field(default_factory=lambda: CheckReport("weil"))


def weil_gram(phi: DrinfeldModule, a: APoly, ambient: FiniteField | None = None,
              max_extension: int = DEFAULT_MAX_EXTENSION) -> DrinfeldPairingResult:
    if ambient is None:
        ambient = torsion_ambient(phi, a, max_extension)
    tors = torsion(phi, a, ambient)
    dual = adjoint_torsion(phi, a, ambient)
    wp = WeilPairing(phi, a, ambient)
    fq = phi.fq
    per_b = [wp.table(list(tors.basis), list(dual.basis), APoly.t_power(fq, k)) for k in range(a.degree)]
    gram = [[[per_b[k][i][j] for k in range(a.degree)] for j in range(dual.dim)] for i in range(tors.dim)]
    return DrinfeldPairingResult(phi, a, tors, dual, gram)


def perfectness(phi: DrinfeldModule, a: APoly, ambient: FiniteField | None = None,
                enumerate_limit: int = 4096, max_extension: int = DEFAULT_MAX_EXTENSION) -> DrinfeldPairingResult:
    """[ , ]_a is perfect as a pairing of A/a-modules, plus balancedness and a Galois spot check.

    Perfectness: alpha -> [alpha, .]_a is injective (checked by rank, and by
    enumerating all of phi[a] when it is small) and |phi[a]| = |phi*[a]|.
    """
    res = weil_gram(phi, a, ambient, max_extension)
    rep = res.report
    ambient = res.tors.basis.ambient
    tors, dual = res.tors, res.dual
    n_expected = phi.rank * a.degree
    rep.record(tors.dim == n_expected, f"|phi[a]| = q^{tors.dim}, expected q^{n_expected}")
    rep.record(dual.dim == tors.dim, "|phi*[a]| != |phi[a]|")
    # injectivity of alpha -> [alpha, .]_a via the flattened F_q matrix
    flat = [[x for row in res.gram[i] for x in row] for i in range(tors.dim)]
    rep.record(linalg.rank(flat) == tors.dim if flat else True, "alpha -> [alpha, .]_a is not injective")
    wp = WeilPairing(phi, a, ambient)
    fq = phi.fq
    if tors.size() <= enumerate_limit:
        alphas = list(tors.elements())
        basis_b = [APoly.t_power(fq, k) for k in range(a.degree)]
        tables = [wp.table(alphas, list(dual.basis), b) for b in basis_b]
        images = {tuple(tuple(tuple(t[i][j].to_list()) for j in range(dual.dim)) for t in tables)
                  for i in range(len(alphas))}
        rep.record(len(images) == len(alphas), "two torsion points have the same pairing image")
    # A-balancedness on basis pairs for b in the monomial basis
    phi_adj = {}
    for k in range(a.degree):
        b = APoly.t_power(fq, k)
        op_star = phi_of(phi, b).adjoint().change_field(ambient)
        phi_adj[k] = op_star
        for al in tors.basis:
            for be in dual.basis:
                for c in range(a.degree):
                    lhs = wp.value(wp.phi_b(b)(al), be, APoly.t_power(fq, c))
                    rhs = wp.value(al, op_star(be), APoly.t_power(fq, c))
                    rep.record(lhs == rhs, "A-balancedness fails")
    # Galois spot check with the Frobenius of L
    m = phi.L.m
    for al in tors.basis:
        for be in dual.basis:
            rep.record(wp(al.frob(m), be.frob(m)) == wp(al, be), "Frobenius moves the pairing")
    # A/a-freeness (squarefree a only)
    if a_gcd(a, _derivative(a)).degree == 0:
        rep.record(tors.is_free(phi.rank), "phi[a] is not free over A/a")
        rep.record(dual.is_free(phi.rank), "phi*[a] is not free over A/a")
    rep.details.update({"dim": tors.dim, "ambient_degree": ambient.m})
    return res


def _derivative(a: APoly) -> APoly:
    return APoly(a.fq, [c * i for i, c in enumerate(a.coeffs)][1:])


def tate_compat(phi: DrinfeldModule, a: APoly, n: int = 1, full_limit: int = 10 ** 6,
                max_extension: int = DEFAULT_MAX_EXTENSION) -> CheckReport:
    """Compatibility between levels a^n and a^(n+1), on all pairs when feasible.

    1. alpha in phi[a^(n+1)], beta in phi*[a^n]:   [alpha, beta]_{a^(n+1)} = [phi_a alpha, beta]_{a^n}
    2. alpha in phi[a^n], beta in phi*[a^(n+1)]:   [alpha, beta]_{a^(n+1)} = [alpha, phi*_a beta]_{a^n}
    3. alpha, beta at level a^(n+1):  [phi_a alpha, phi*_a beta]_{a^n}(c) = [alpha, beta]_{a^(n+1)}(a c)
    Relations 1 and 2 are compared on c = t^k, k < (n+1) deg a; relation 3 on k < n deg a.
    """
    if n < 1:
        raise PreconditionError("level n must be >= 1")
    fq = phi.fq
    lo, hi = a ** n, a ** (n + 1)
    _check_torsion_pre(phi, a)
    ambient = torsion_ambient(phi, hi, max_extension)
    rep = CheckReport("tate")
    t_lo, t_hi = torsion(phi, lo, ambient), torsion(phi, hi, ambient)
    d_lo, d_hi = adjoint_torsion(phi, lo, ambient), adjoint_torsion(phi, hi, ambient)
    w_lo, w_hi = WeilPairing(phi, lo, ambient), WeilPairing(phi, hi, ambient)
    phi_a = phi_of(phi, a).change_field(ambient)
    phi_a_star = phi_a.adjoint()

    def pts(mod: TorsionModule, partner_size: int) -> list[FFElem]:
        if mod.size() * partner_size <= full_limit:
            return list(mod.elements())
        return list(mod.basis)

    cs_hi = [APoly.t_power(fq, k) for k in range(hi.degree)]
    cs_lo = [APoly.t_power(fq, k) for k in range(lo.degree)]

    alphas = pts(t_hi, d_lo.size())
    betas = pts(d_lo, t_hi.size())
    moved = [phi_a(x) for x in alphas]
    for c in cs_hi:
        lhs = w_hi.table(alphas, betas, c)
        rhs = w_lo.table(moved, betas, c)
        for i, j in itertools.product(range(len(alphas)), range(len(betas))):
            rep.record(lhs[i][j] == rhs[i][j], "relation 1 fails")

    alphas = pts(t_lo, d_hi.size())
    betas = pts(d_hi, t_lo.size())
    moved_b = [phi_a_star(y) for y in betas]
    for c in cs_hi:
        lhs = w_hi.table(alphas, betas, c)
        rhs = w_lo.table(alphas, moved_b, c)
        for i, j in itertools.product(range(len(alphas)), range(len(betas))):
            rep.record(lhs[i][j] == rhs[i][j], "relation 2 fails")

    alphas = pts(t_hi, d_hi.size())
    betas = pts(d_hi, t_hi.size())
    moved = [phi_a(x) for x in alphas]
    moved_b = [phi_a_star(y) for y in betas]
    for c in cs_lo:
        lhs = w_lo.table(moved, moved_b, c)
        rhs = w_hi.table(alphas, betas, a * c)
        for i, j in itertools.product(range(len(alphas)), range(len(betas))):
            rep.record(lhs[i][j] == rhs[i][j], "ladder relation fails")
    rep.details.update({"level": n, "ambient_degree": ambient.m, "size_hi": t_hi.size()})
    return rep
