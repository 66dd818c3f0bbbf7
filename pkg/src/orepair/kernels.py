"""Kernels of twisted polynomials over finite fields and the kernel pairing.

For f in L{tau, tau^-1} with L finite, ker f is an F_q-space of dimension
deg(f) - low(f) living in a finite extension M of L.  We find M exactly: the
Frobenius of L acts on ker f through the "norm" of the companion matrix of f,
so the degree of the splitting extension is that matrix's multiplicative
order.  Inside M the map z -> f(z) is F_p-linear and the kernel is a null space.

The pairing <alpha, beta>_f = g_alpha^*(beta) uses the unique g_alpha with
f o alpha = g_alpha o (1 - tau).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import lcm
from typing import Iterator, Sequence

import numpy as np

from . import linalg
from .errors import FieldMismatchError, InvariantError, PreconditionError
from .fields import FFElem, FiniteField, restrict
from .linalg import matmul_mod, nullspace_mod, rank_mod, solve_mod
from .reports import CheckReport
from .twisted import TwistedPoly, remainder_right

DEFAULT_MAX_EXTENSION = 2048
"""Largest ambient degree over F_p the kernel search will build."""


def _require_finite(f: TwistedPoly) -> FiniteField:
    if not isinstance(f.field, FiniteField):
        raise PreconditionError("kernels are computed over finite coefficient fields only")
    return f.field


def _matmul(a, b, zero):
    n, k, m = len(a), len(b), len(b[0])
    return [[sum((a[i][l] * b[l][j] for l in range(k)), zero) for j in range(m)] for i in range(n)]


def splitting_degree(f: TwistedPoly, max_extension: int = DEFAULT_MAX_EXTENSION) -> int:
    """Degree over L of the smallest extension of L containing ker f."""
    L = _require_finite(f)
    if f.is_zero():
        raise PreconditionError("the zero polynomial has no finite kernel")
    _, g = f.normalized()
    d = g.degree
    if d == 0:
        return 1
    zero, one = L.zero(), L.one()
    lead_inv = g[d].inverse()
    c0 = [[one if j == i + 1 else zero for j in range(d)] for i in range(d - 1)]
    c0.append([-(g[i] * lead_inv) for i in range(d)])
    k = L.m // f.e  # |L| = q^k
    prod = [[one if i == j else zero for j in range(d)] for i in range(d)]
    for j in range(k):
        cj = [[g.twist(x, j) for x in row] for row in c0]
        prod = _matmul(cj, prod, zero)
    ident = [[one if i == j else zero for j in range(d)] for i in range(d)]
    power, s = prod, 1
    while power != ident:
        power = _matmul(power, prod, zero)
        s += 1
        if L.m * s > max_extension:
            raise InvariantError(
                f"kernel needs an extension of degree > {max_extension} over F_{L.p}"
            )
    return s


def ambient_for(*polys: TwistedPoly, max_extension: int = DEFAULT_MAX_EXTENSION) -> FiniteField:
    """Smallest field F_{p^N} (from the fixed tower) containing the kernels of all ``polys``."""
    if not polys:
        raise ValueError("need at least one polynomial")
    p = polys[0].field.p
    degree = 1
    for f in polys:
        L = _require_finite(f)
        if L.p != p:
            raise FieldMismatchError("polynomials in different characteristics")
        degree = lcm(degree, L.m * splitting_degree(f, max_extension))
    if degree > max_extension:
        raise InvariantError(f"common ambient degree {degree} exceeds the cap {max_extension}")
    return FiniteField(p, degree)


def linear_map_matrix(f: TwistedPoly, ambient: FiniteField) -> np.ndarray:
    """F_p-matrix of z -> f(z) on ``ambient``."""
    fm = f.change_field(ambient)
    p, n = ambient.p, ambient.m
    total = np.zeros((n, n), dtype=np.int64)
    for k, c in fm.items():
        term = matmul_mod(ambient.multiplication_matrix(c), ambient.frobenius_matrix(f.e * k), p)
        total = (total + term) % p
    return total


def fq_elements(ambient: FiniteField, e: int) -> list[FFElem]:
    """All elements of F_{p^e} inside ``ambient``."""
    return ambient.subfield_elements(e)


@dataclass(frozen=True)
class KernelBasis:
    """An F_q-basis of a subspace of ker f inside the finite field ``ambient``."""

    f: TwistedPoly
    ambient: FiniteField
    basis: tuple[FFElem, ...]

    @property
    def q(self) -> int:
        return self.f.q

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return self.dim

    def __iter__(self):
        return iter(self.basis)

    def size(self) -> int:
        return self.q ** self.dim

    def elements(self) -> Iterator[FFElem]:
        """Every element of the F_q-span (q**dim of them)."""
        scalars = fq_elements(self.ambient, self.f.e)
        for coeffs in itertools.product(scalars, repeat=self.dim):
            total = self.ambient.zero()
            for c, z in zip(coeffs, self.basis):
                total = total + c * z
            yield total

    def _fp_columns(self) -> np.ndarray:
        omegas = self.ambient.subfield_basis(self.f.e)
        cols = [(w * z).vec for z in self.basis for w in omegas]
        if not cols:
            return np.zeros((self.ambient.m, 0), dtype=np.int64)
        return np.stack(cols, axis=1)

    def contains(self, x: FFElem) -> bool:
        if x.field != self.ambient:
            raise FieldMismatchError("element outside the ambient field")
        if x.is_zero():
            return True
        if self.dim == 0:
            return False
        return solve_mod(self._fp_columns(), x.vec, self.ambient.p) is not None

    def coordinates(self, x: FFElem) -> list[FFElem]:
        """F_q-coordinates of ``x`` in this basis, as elements of the ambient field."""
        if self.dim == 0:
            if x.is_zero():
                return []
            raise PreconditionError("element not in the span")
        sol = solve_mod(self._fp_columns(), x.vec, self.ambient.p)
        if sol is None:
            raise PreconditionError("element not in the span")
        omegas = self.ambient.subfield_basis(self.f.e)
        e = len(omegas)
        out = []
        for j in range(self.dim):
            c = self.ambient.zero()
            for i, w in enumerate(omegas):
                c = c + w * int(sol[j * e + i])
            out.append(c)
        return out

    def same_span(self, other: "KernelBasis") -> bool:
        if self.ambient != other.ambient:
            raise FieldMismatchError("different ambient fields")
        p = self.ambient.p
        a, b = self._fp_columns(), other._fp_columns()
        ra, rb = rank_mod(a.T, p), rank_mod(b.T, p)
        return ra == rb == rank_mod(np.concatenate([a, b], axis=1).T, p)


def _fq_basis_from_fp(rows: np.ndarray, ambient: FiniteField, e: int) -> list[FFElem]:
    """Greedy F_q-independent subset of F_p-vectors spanning an F_q-space."""
    omegas = ambient.subfield_basis(e)
    p = ambient.p
    span: list[np.ndarray] = []
    chosen: list[FFElem] = []
    for row in rows:
        z = FFElem(ambient, row)
        cand = span + [(w * z).vec for w in omegas]
        if rank_mod(np.stack(cand), p) == len(span) + e:
            span = cand
            chosen.append(z)
    return chosen


def kernel_basis(
    f: TwistedPoly, ambient: FiniteField | None = None, max_extension: int = DEFAULT_MAX_EXTENSION
) -> KernelBasis:
    """F_q-basis of the whole of ker f (dimension deg - low) in an extension containing it."""
    L = _require_finite(f)
    if f.is_zero():
        raise PreconditionError("the zero polynomial has no finite kernel")
    _, g = f.normalized()
    d = g.degree
    user_ambient = ambient is not None
    if ambient is None:
        ambient = ambient_for(f, max_extension=max_extension)
    if ambient.p != L.p or ambient.m % L.m:
        raise FieldMismatchError("ambient field does not contain the coefficient field")
    if d == 0:
        return KernelBasis(f, ambient, ())
    ns = nullspace_mod(linear_map_matrix(g, ambient), ambient.p)
    if ns.shape[0] != f.e * d:
        err = PreconditionError if user_ambient else InvariantError
        raise err(
            f"kernel in {ambient} has F_p-dimension {ns.shape[0]}, expected {f.e * d}"
        )
    basis = _fq_basis_from_fp(ns, ambient, f.e)
    if len(basis) != d:
        raise InvariantError("failed to extract an F_q-basis of the kernel")
    return KernelBasis(f, ambient, tuple(basis))


def adjoint_kernel_basis(
    f: TwistedPoly, ambient: FiniteField | None = None, max_extension: int = DEFAULT_MAX_EXTENSION
) -> KernelBasis:
    return kernel_basis(f.adjoint(), ambient, max_extension)


# ------------------------------------------------------------------ pairing

class KernelPairing:
    """<alpha, beta>_f with g_alpha^* memoised per alpha.

    All points must lie in ``ambient``; values are returned as ambient
    elements lying in F_q.
    """

    def __init__(self, f: TwistedPoly, ambient: FiniteField, check: bool = True):
        _require_finite(f)
        if f.is_zero():
            raise PreconditionError("pairing needs a nonzero polynomial")
        self.f = f.change_field(ambient)
        self.f_adj = self.f.adjoint()
        self.ambient = ambient
        self.check = check
        self._g_star: dict[FFElem, TwistedPoly] = {}

    def g_alpha(self, alpha: FFElem) -> TwistedPoly:
        """The unique g with f o alpha = g o (1 - tau)."""
        g, c = remainder_right(self.f * alpha)
        if not c.is_zero():
            raise PreconditionError(f"{alpha!r} is not in ker f")
        return g

    def g_star(self, alpha: FFElem) -> TwistedPoly:
        gs = self._g_star.get(alpha)
        if gs is None:
            gs = self.g_alpha(alpha).adjoint()
            self._g_star[alpha] = gs
        return gs

    def __call__(self, alpha: FFElem, beta: FFElem) -> FFElem:
        if alpha.field != self.ambient or beta.field != self.ambient:
            raise FieldMismatchError("points must lie in the ambient field")
        if self.check and not self.f_adj(beta).is_zero():
            raise PreconditionError(f"{beta!r} is not in ker f*")
        value = self.g_star(alpha)(beta)
        if value.frob(self.f.e) != value:
            raise InvariantError("pairing value is not in F_q")
        return value


class _ColumnBlock:
    """Points stacked as F_p columns, with their Frobenius twists computed on demand.

    A twisted polynomial g is F_p-linear, so g evaluated at every column is
    sum_n Mult(c_n) @ Frob^(e n) @ columns: one exact evaluation per column,
    batched through matrix products.
    """

    def __init__(self, ambient: FiniteField, points: Sequence[FFElem], e: int):
        self.ambient = ambient
        self.e = e
        self.cols = (
            np.stack([x.vec for x in points], axis=1)
            if points else np.zeros((ambient.m, 0), dtype=np.int64)
        )
        self._twists: dict[int, np.ndarray] = {}

    def twisted(self, n: int) -> np.ndarray:
        out = self._twists.get(n)
        if out is None:
            frob = self.ambient.frobenius_matrix(self.e * n)
            out = matmul_mod(frob, self.cols, self.ambient.p)
            self._twists[n] = out
        return out

    def apply(self, terms) -> np.ndarray:
        """sum over (shift, coefficient) of coefficient * column^(q^shift)."""
        p = self.ambient.p
        total = np.zeros_like(self.cols)
        for n, c in terms:
            total = (total + matmul_mod(self.ambient.multiplication_matrix(c), self.twisted(n), p)) % p
        return total


def _check_fq(values: np.ndarray, ambient: FiniteField, e: int) -> None:
    if values.size == 0:
        return
    frob = ambient.frobenius_matrix(e)
    if not np.array_equal(matmul_mod(frob, values, ambient.p), values):
        raise InvariantError("pairing value is not in F_q")


def _to_elems(ambient: FiniteField, values: np.ndarray) -> list[FFElem]:
    return [FFElem(ambient, values[:, j].copy()) for j in range(values.shape[1])]


def pairing_array(pairing: KernelPairing, alphas: Sequence[FFElem], betas: Sequence[FFElem]) -> np.ndarray:
    """Array V with V[i, :, j] the F_p-vector of <alpha_i, beta_j>_f; each entry an exact evaluation of g_alpha^*."""
    ambient, f = pairing.ambient, pairing.f
    block = _ColumnBlock(ambient, betas, f.e)
    if pairing.check and betas:
        image = matmul_mod(linear_map_matrix(pairing.f_adj, ambient), block.cols, ambient.p)
        if image.any():
            raise PreconditionError("some beta is not in ker f*")
    out = np.zeros((len(alphas), ambient.m, len(betas)), dtype=np.int64)
    for i, alpha in enumerate(alphas):
        values = block.apply(pairing.g_star(alpha).items())
        _check_fq(values, ambient, f.e)
        out[i] = values
    return out


def pairing_values(pairing: KernelPairing, alphas: Sequence[FFElem], betas: Sequence[FFElem]) -> list[list[FFElem]]:
    """Table of <alpha, beta>_f over all given pairs."""
    arr = pairing_array(pairing, alphas, betas)
    return [_to_elems(pairing.ambient, arr[i]) for i in range(len(alphas))]


def concomitant_array(f: TwistedPoly, us: Sequence[FFElem], vs: Sequence[FFElem],
                      ambient: FiniteField) -> np.ndarray:
    """Array V with V[i, :, j] the F_p-vector of B(u_i, v_j), using the closed forms of :func:`concomitant`."""
    f = f.change_field(ambient)
    e = f.e
    block = _ColumnBlock(ambient, vs, e)
    out = np.zeros((len(us), ambient.m, len(vs)), dtype=np.int64)
    for i, u in enumerate(us):
        terms = []
        for n, a in f.items():
            if n > 0:
                x = a * u.frob(e * n)
                terms.extend((-k, -x.frob(-e * k)) for k in range(1, n + 1))
            elif n < 0:
                x = a * u.frob(e * n)
                terms.extend((k, x.frob(e * k)) for k in range(-n))
        out[i] = block.apply(terms)
    return out


def concomitant_values(f: TwistedPoly, us: Sequence[FFElem], vs: Sequence[FFElem],
                       ambient: FiniteField) -> list[list[FFElem]]:
    arr = concomitant_array(f, us, vs, ambient)
    return [_to_elems(ambient, arr[i]) for i in range(len(us))]


def pair(f: TwistedPoly, alpha: FFElem, beta: FFElem) -> FFElem:
    """<alpha, beta>_f for alpha in ker f and beta in ker f* (both in the same field)."""
    if alpha.field != beta.field:
        raise FieldMismatchError("alpha and beta must lie in one field")
    return KernelPairing(f, alpha.field)(alpha, beta)


@dataclass(frozen=True)
class PairingTable:
    f: TwistedPoly
    rows: KernelBasis
    cols: KernelBasis
    gram: tuple[tuple[FFElem, ...], ...]

    @property
    def dim(self) -> int:
        return self.rows.dim

    def rank(self) -> int:
        if not self.gram:
            return 0
        return linalg.rank([list(r) for r in self.gram])

    def is_perfect(self) -> bool:
        return self.rows.dim == self.cols.dim == self.rank()

    def fq_gram(self) -> list[list[FFElem]]:
        """Gram entries moved into the standalone field F_q."""
        fq = FiniteField(self.f.field.p, self.f.e)
        return [[restrict(x, fq) for x in row] for row in self.gram]

    def text(self) -> str:
        from .serialize import fq_to_json

        cells = [[str(fq_to_json(x, self.f.e)) for x in row] for row in self.gram]
        header = ["", *[f"b{j}" for j in range(self.cols.dim)]]
        table = [header] + [[f"a{i}", *row] for i, row in enumerate(cells)]
        width = max((len(c) for row in table for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in table)


def pairing_table(f: TwistedPoly, ambient: FiniteField | None = None,
                  max_extension: int = DEFAULT_MAX_EXTENSION) -> PairingTable:
    _require_finite(f)
    if f.is_zero():
        raise PreconditionError("pairing needs a nonzero polynomial")
    fa = f.adjoint()
    if ambient is None:
        ambient = ambient_for(f, fa, max_extension=max_extension)
    rows = kernel_basis(f, ambient)
    cols = kernel_basis(fa, ambient)
    pairing = KernelPairing(f, ambient)
    gram = tuple(tuple(pairing(a, b) for b in cols) for a in rows)
    table = PairingTable(f, rows, cols, gram)
    return table


# -------------------------------------------------------------- concomitant

def concomitant(f: TwistedPoly, u, v):
    """B(u, v) with u f*(v) - v f(u) = B^q - B, summed term by term.

    For a tau^n with n > 0 put X = a v u^(q^n); then B_n = -sum_{k=1..n} X^(1/q^k).
    For n = -m < 0 put X = a v u^(q^-m); then B_n = sum_{k=0..m-1} X^(q^k).
    """
    if isinstance(u, FFElem) and isinstance(f.field, FiniteField):
        f = f.change_field(u.field)
    e = f.e
    total = u.field.zero()
    for n, a in f.items():
        if n > 0:
            x = a * v * u.frob(e * n)
            for k in range(1, n + 1):
                total = total - x.frob(-e * k)
        elif n < 0:
            m = -n
            x = a * v * u.frob(-e * m)
            for k in range(m):
                total = total + x.frob(e * k)
    return total


def concomitant_identity(f: TwistedPoly, u, v) -> bool:
    """u f*(v) - v f(u) == B^q - B, exactly."""
    if isinstance(u, FFElem) and isinstance(f.field, FiniteField):
        f = f.change_field(u.field)
    b = concomitant(f, u, v)
    lhs = u * f.adjoint()(v) - v * f(u)
    return lhs == b.frob(f.e) - b


# ------------------------------------------------------------- annihilators

def annihilator(f: TwistedPoly, subspace: Sequence[FFElem], ambient: FiniteField | None = None) -> KernelBasis:
    """{beta in ker f* : <alpha, beta>_f = 0 for all alpha in subspace}."""
    if ambient is None:
        if subspace:
            ambient = subspace[0].field
        else:
            ambient = ambient_for(f, f.adjoint())
    lifted = f.change_field(ambient)
    for alpha in subspace:
        if alpha.field != ambient:
            raise FieldMismatchError("subspace elements must share the ambient field")
        if not lifted(alpha).is_zero():
            raise PreconditionError(f"{alpha!r} is not in ker f")
    cols = kernel_basis(f.adjoint(), ambient)
    pairing = KernelPairing(f, ambient)
    matrix = [[pairing(a, b) for b in cols] for a in subspace]
    coeff_vectors = linalg.nullspace(matrix, ambient.zero(), ambient.one(), ncols=cols.dim)
    basis = []
    for vec in coeff_vectors:
        beta = ambient.zero()
        for c, b in zip(vec, cols):
            beta = beta + c * b
        basis.append(beta)
    return KernelBasis(f.adjoint(), ambient, tuple(basis))


def _pairs(k1: KernelBasis, k2: KernelBasis, full_limit: int):
    """All element pairs when small enough, else basis pairs."""
    if k1.size() * k2.size() <= full_limit:
        return list(itertools.product(list(k1.elements()), list(k2.elements())))
    return list(itertools.product(k1.basis, k2.basis))


def isotropy_check(f: TwistedPoly, h: TwistedPoly | None = None, full_limit: int = 4096) -> CheckReport:
    """Self-adjoint f: <a,a> = 0 on ker f, and ker h maximal isotropic when f = h* o h.
    Anti-self-adjoint f: the Gram matrix on ker f is symmetric."""
    fa = f.adjoint()
    if f == fa:
        report = CheckReport("isotropy")
        ambient = ambient_for(f)
        ker = kernel_basis(f, ambient)
        pairing = KernelPairing(f, ambient)
        elements = list(ker.elements()) if ker.size() <= full_limit else list(ker.basis)
        for a in elements:
            report.record(pairing(a, a).is_zero(), f"<a,a> != 0 for a={a!r}")
        if h is not None:
            if h.adjoint() * h != f:
                raise PreconditionError("f != h* o h")
            kh = kernel_basis(h, ambient)
            ann = annihilator(f, list(kh.basis), ambient)
            report.record(ann.same_span(kh), "annihilator of ker h differs from ker h")
            report.details["dim_ker_h"] = kh.dim
        report.details["dim_ker_f"] = ker.dim
        return report
    if fa == -f:
        report = CheckReport("symmetry")
        ambient = ambient_for(f)
        ker = kernel_basis(f, ambient)
        pairing = KernelPairing(f, ambient)
        for a, b in _pairs(ker, ker, full_limit):
            report.record(pairing(a, b) == pairing(b, a), f"<a,b> != <b,a> at {a!r}, {b!r}")
        report.details["dim_ker_f"] = ker.dim
        return report
    raise PreconditionError("isotropy_check needs f* = f or f* = -f")


def change_field_trace(f: TwistedPoly, q_big: int, full_limit: int = 4096) -> CheckReport:
    """<a,b>_f = Tr_{F_q'/F_q} <a,b>'_f for F_q'-linear f, on kernel pairs."""
    f_big = f.with_q(q_big)
    m = f_big.e // f.e
    report = CheckReport("trace")
    ambient = ambient_for(f, f.adjoint())
    ker = kernel_basis(f, ambient)
    kers = kernel_basis(f.adjoint(), ambient)
    small = KernelPairing(f, ambient)
    big = KernelPairing(f_big, ambient)
    for a, b in _pairs(ker, kers, full_limit):
        lhs = small(a, b)
        rhs = big(a, b).trace(f.e, over=f.e * m)
        report.record(lhs == rhs, f"trace identity fails at {a!r}, {b!r}")
    return report


# ---------------------------------------------------------- d x d matrices

Matrix = Sequence[Sequence[TwistedPoly]]


def matrix_adjoint(a: Matrix) -> list[list[TwistedPoly]]:
    """(a_ij)* = (a_ji^*)."""
    d = len(a)
    return [[a[j][i].adjoint() for j in range(d)] for i in range(d)]


def matrix_apply(a: Matrix, u: Sequence[FFElem]) -> list[FFElem]:
    zero = u[0].field.zero()
    return [sum((entry(x) for entry, x in zip(row, u)), zero) for row in a]


def matrix_kernel(a: Matrix, ambient: FiniteField) -> list[list[FFElem]]:
    """F_q-basis of {u in ambient^d : A u = 0} (only the part inside ``ambient``)."""
    d = len(a)
    n, p = ambient.m, ambient.p
    big = np.zeros((n * d, n * d), dtype=np.int64)
    e = a[0][0].e
    for i in range(d):
        for j in range(d):
            if not a[i][j].is_zero():
                big[i * n:(i + 1) * n, j * n:(j + 1) * n] = linear_map_matrix(a[i][j], ambient)
    ns = nullspace_mod(big, p)
    omegas = ambient.subfield_basis(e)
    span: list[np.ndarray] = []
    out = []
    for row in ns:
        vec = [FFElem(ambient, row[k * n:(k + 1) * n]) for k in range(d)]
        cand = span + [np.concatenate([(w * x).vec for x in vec]) for w in omegas]
        if rank_mod(np.stack(cand), p) == len(span) + len(omegas):
            span = cand
            out.append(vec)
    return out


def matrix_pair(a: Matrix, u: Sequence[FFElem], v: Sequence[FFElem], check: bool = True) -> FFElem:
    """B_A(u, v) = sum_{i,j} B_{a_ji}(u_i, v_j) for u in ker A, v in ker A*."""
    d = len(a)
    if len(u) != d or len(v) != d:
        raise PreconditionError("vectors must have length d")
    ambient = u[0].field
    a = [[entry.change_field(ambient) for entry in row] for row in a]
    if check:
        if any(not x.is_zero() for x in matrix_apply(a, u)):
            raise PreconditionError("u is not in ker A")
        if any(not x.is_zero() for x in matrix_apply(matrix_adjoint(a), v)):
            raise PreconditionError("v is not in ker A*")
    total = ambient.zero()
    for i in range(d):
        for j in range(d):
            total = total + concomitant(a[j][i], u[i], v[j])
    if check and total.frob(a[0][0].e) != total:
        raise InvariantError("matrix pairing value is not in F_q")
    return total


def matrix_concomitant_identity(a: Matrix, u: Sequence[FFElem], v: Sequence[FFElem]) -> bool:
    """u . A*(v) - v . A(u) == B_A^q - B_A."""
    ambient = u[0].field
    a = [[entry.change_field(ambient) for entry in row] for row in a]
    d = len(a)
    b = ambient.zero()
    for i in range(d):
        for j in range(d):
            b = b + concomitant(a[j][i], u[i], v[j])
    lhs = sum((x * y for x, y in zip(u, matrix_apply(matrix_adjoint(a), v))), ambient.zero())
    lhs = lhs - sum((x * y for x, y in zip(v, matrix_apply(a, u))), ambient.zero())
    return lhs == b.frob(a[0][0].e) - b
