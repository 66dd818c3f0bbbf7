from __future__ import annotations

import itertools
import random

import pytest

from orepair import FiniteField, TwistedPoly
from orepair.errors import PreconditionError
from orepair.kernels import (
    KernelPairing,
    adjoint_kernel_basis,
    annihilator,
    change_field_trace,
    concomitant,
    concomitant_identity,
    isotropy_check,
    kernel_basis,
    matrix_concomitant_identity,
    matrix_kernel,
    matrix_pair,
    pair,
    pairing_table,
    splitting_degree,
)
from orepair.verify import random_poly

F2, F3, F5 = FiniteField(2, 1), FiniteField(3, 1), FiniteField(5, 1)


def P(field, q, coeffs):
    return TwistedPoly(field, q, coeffs)


def brute_kernel(f, ambient):
    fa = f.change_field(ambient)
    return {x for x in ambient.elements() if fa(x).is_zero()}


def test_kernel_examples(f4, theta):
    kb = kernel_basis(P(F2, 2, {1: 1, 0: -1}))
    assert kb.dim == 1 and list(kb.basis) == [F2.one()]
    kb = kernel_basis(P(F2, 2, {2: 1, 1: 1, 0: 1}))
    F8 = FiniteField(2, 3)
    assert kb.dim == 2 and kb.ambient == F8
    roots = {x for x in F8.elements() if x ** 3 + x + 1 == F8.zero()}
    assert set(kb.elements()) == {F8.zero()} | roots
    kb = kernel_basis(P(f4, 2, {0: theta, 1: 1}))
    assert set(kb.elements()) == {f4.zero(), theta}


def test_adjoint_kernel_examples(f4, theta):
    kb = adjoint_kernel_basis(P(F3, 3, {1: 1, 0: -1}))
    assert set(kb.elements()) == set(F3.elements())
    kb = adjoint_kernel_basis(P(f4, 2, {0: theta, 1: 1}))
    assert set(kb.elements()) == {f4.zero(), theta}


def test_adjoint_kernel_dimension_matches():
    F9 = FiniteField(3, 2)
    rng = random.Random(11)
    for _ in range(50):
        f = random_poly(rng, F9, 3, 0, rng.randint(0, 4))
        assert kernel_basis(f).dim == adjoint_kernel_basis(f).dim == f.degree


@pytest.mark.parametrize("p,m,q", [(2, 1, 2), (2, 2, 2), (3, 1, 3), (2, 2, 4)])
def test_kernel_against_brute_force(p, m, q):
    L = FiniteField(p, m)
    rng = random.Random(p + m + q)
    for _ in range(6):
        f = random_poly(rng, L, q, 0, rng.randint(1, 2))
        kb = kernel_basis(f)
        assert kb.ambient.m % L.m == 0
        elems = set(kb.elements())
        assert len(elems) == kb.size() == q ** f.degree
        if kb.ambient.order <= 4096:
            assert elems == brute_kernel(f, kb.ambient)
        else:
            # q^d distinct roots of a separable polynomial of degree q^d are all of them
            fa = f.change_field(kb.ambient)
            assert all(fa(x).is_zero() for x in elems)


def test_splitting_degree_is_minimal():
    f = P(F2, 2, {2: 1, 1: 1, 0: 1})
    assert splitting_degree(f) == 3
    for n in (1, 2):
        assert len(brute_kernel(f, FiniteField(2, n))) < 4


def test_pair_examples(f4, theta):
    for a, b in itertools.product(F3.elements(), repeat=2):
        assert pair(P(F3, 3, {1: 1, 0: -1}), a, b) == -(a * b)
    f = P(f4, 2, {0: theta, 1: 1})
    assert pair(f, f4.zero(), theta).is_zero()
    assert pair(f, theta, theta) == f4.one()


def test_pair_rejects_non_kernel_points(f4, theta):
    with pytest.raises(PreconditionError):
        pair(P(f4, 2, {0: theta, 1: 1}), f4.one(), theta)


def test_pairing_table_examples():
    t = pairing_table(P(F3, 3, {1: 1, 0: -1}))
    assert [[int(x.vec[0]) for x in row] for row in t.gram] == [[2]]
    t = pairing_table(TwistedPoly.scalar(F3, 3, 2))
    assert t.dim == 0 and t.is_perfect()
    t = pairing_table(P(F2, 2, {2: 1, 1: 1, 0: 1}))
    assert t.dim == 2 and t.is_perfect()
    # brute-force Gram over all element pairs agrees with the bilinear extension
    pairing = KernelPairing(t.f, t.rows.ambient)
    for a, b in itertools.product(t.rows.elements(), t.cols.elements()):
        ca, cb = t.rows.coordinates(a), t.cols.coordinates(b)
        expected = sum((ca[i] * cb[j] * t.gram[i][j] for i in range(2) for j in range(2)),
                       t.rows.ambient.zero())
        assert pairing(a, b) == expected


def test_concomitant_examples(f4, theta):
    s = TwistedPoly.scalar(f4, 2, theta)
    u, v = theta, theta ** 2
    assert concomitant(s, u, v).is_zero()
    assert u * s.adjoint()(v) - v * s(u) == f4.zero()
    tau = TwistedPoly.tau(f4, 2)
    b = concomitant(tau, u, v)
    assert b == -((theta ** 2 * theta ** 2).frob(-1))
    assert concomitant_identity(tau, u, v)
    f = P(F2, 2, {2: 1, 1: 1, 0: 1})
    t = pairing_table(f)
    for a, bb in itertools.product(t.rows.elements(), t.cols.elements()):
        assert concomitant(f.change_field(t.rows.ambient), a, bb) == pair(f, a, bb)


def test_concomitant_identity_random():
    F9 = FiniteField(3, 2)
    rng = random.Random(4)
    for _ in range(20):
        f = random_poly(rng, F9, 3, -2, 2)
        u, v = F9.random_element(rng), F9.random_element(rng)
        assert concomitant_identity(f, u, v)


def test_annihilator_examples():
    f = P(F3, 3, {1: 1, 0: 1}) * P(F3, 3, {1: 1, 0: -1})
    t = pairing_table(f)
    amb = t.rows.ambient
    full = annihilator(f, [amb.zero()], amb)
    assert full.same_span(t.cols)
    assert annihilator(f, list(t.rows.basis), amb).dim == 0
    sub = [amb.one()]  # ker(tau - 1) = F_3
    ann = annihilator(f, sub, amb)
    other = kernel_basis(P(F3, 3, {1: 1, 0: 1}).adjoint(), amb)
    assert ann.same_span(other)


def test_isotropy_examples():
    h = P(F3, 3, {1: 1, 0: -1})
    assert isotropy_check(h.adjoint() * h, h).passed
    assert isotropy_check(TwistedPoly.scalar(F3, 3, 1)).passed
    a = F5(2)
    f = P(F5, 5, {1: a, -1: -a.frob(-1)})
    assert f.adjoint() == -f
    assert isotropy_check(f).passed


def test_change_field_trace_examples(f4):
    # F_4-linearity needs F_4 among the coefficients, so the F_2 polynomials are read over F_4
    assert change_field_trace(P(f4, 2, {2: 1, 0: -1}), 4).passed
    assert change_field_trace(P(F2, 2, {1: 1, 0: 1}), 2).passed
    rep = change_field_trace(P(f4, 2, {4: 1, 0: -1}), 4)
    assert rep.passed and rep.checked == 16 * 16


def test_matrix_pair_d1_agrees_with_pair(f4, theta):
    f = P(f4, 2, {0: theta, 1: 1})
    assert matrix_pair([[f]], [theta], [theta]) == pair(f, theta, theta)


def test_matrix_pair_diagonal_is_additive():
    g = P(F2, 2, {1: 1, 0: 1})
    A = [[g, TwistedPoly(F2, 2, {})], [TwistedPoly(F2, 2, {}), g]]
    basis = matrix_kernel(A, F2)
    assert len(basis) == 2
    vecs = [[x, y] for x in F2.elements() for y in F2.elements()]
    for u, v in itertools.product(vecs, repeat=2):
        expected = pair(g, u[0], v[0]) + pair(g, u[1], v[1])
        assert matrix_pair(A, u, v) == expected
        assert matrix_concomitant_identity(A, u, v)
    zero = [F2.zero(), F2.zero()]
    assert matrix_pair(A, zero, [F2.one(), F2.zero()]).is_zero()


def test_matrix_concomitant_identity_offdiagonal(f4, theta):
    rng = random.Random(8)
    A = [[random_poly(rng, f4, 2, -1, 1) for _ in range(2)] for _ in range(2)]
    for _ in range(10):
        u = [f4.random_element(rng) for _ in range(2)]
        v = [f4.random_element(rng) for _ in range(2)]
        assert matrix_concomitant_identity(A, u, v)
