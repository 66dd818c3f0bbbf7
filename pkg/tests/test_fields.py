from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from orepair import FiniteField
from orepair.errors import FieldMismatchError
from orepair.fields import CONWAY, embed, embedding_matrix, is_irreducible, restrict


def test_f4_frobenius_round_trip(f4, theta):
    assert theta.frob() == theta + 1
    assert (theta + 1).frob(-1) == theta


def test_inverse_of_one():
    for p, m in [(2, 1), (3, 2), (5, 3)]:
        F = FiniteField(p, m)
        assert F.one().inverse() == F.one()


def test_f8_product_matches_hand_table():
    F = FiniteField(2, 3)
    assert list(F.modulus) == [1, 1, 0, 1]
    th = F.gen()
    assert th * th ** 2 == th + 1
    # brute-force multiplication by polynomial reduction
    for a, b in itertools.product(range(8), repeat=2):
        va = [(a >> i) & 1 for i in range(3)]
        vb = [(b >> i) & 1 for i in range(3)]
        prod = [0] * 5
        for i in range(3):
            for j in range(3):
                prod[i + j] ^= va[i] & vb[j]
        for k in (4, 3):
            if prod[k]:
                prod[k] = 0
                prod[k - 3] ^= 1
                prod[k - 2] ^= 1
        assert F(va) * F(vb) == F(prod[:3])


def test_inverse_of_zero_raises(f4):
    with pytest.raises(ZeroDivisionError):
        f4.zero().inverse()


def test_field_mismatch(f4):
    with pytest.raises(FieldMismatchError):
        f4.one() + FiniteField(2, 3).one()


@pytest.mark.parametrize("p,m", [(2, 1), (2, 4), (3, 3), (5, 2), (7, 2), (2, 13)])
def test_frobenius_is_bijection_and_fixes_everything_at_degree(p, m):
    F = FiniteField(p, m)
    assert is_irreducible(F.modulus, p)
    rng = random.Random(p * 100 + m)
    for _ in range(20):
        x = F.random_element(rng)
        assert x.frob().frob(-1) == x
        assert x.frob(-1).frob() == x
        assert x ** (p ** m) == x


def test_embedding_small_cases(f4):
    F2, F16 = FiniteField(2, 1), FiniteField(2, 4)
    assert embed(F2.one(), f4) == f4.one()
    assert embed(F2.zero(), f4) == f4.zero()
    img = embed(f4.gen(), F16)
    assert img * img + img + 1 == F16.zero()


def test_embedding_chain_commutes():
    F2, F4, F16 = FiniteField(2, 1), FiniteField(2, 2), FiniteField(2, 4)
    for x in F2.elements():
        assert embed(embed(x, F4), F16) == embed(x, F16)
    for x in F4.elements():
        assert restrict(embed(x, F16), F4) == x


@pytest.mark.parametrize("p,m,n", [(2, 2, 4), (2, 3, 6), (3, 2, 4), (2, 4, 12), (5, 1, 3)])
def test_embedding_is_ring_homomorphism(p, m, n):
    small, big = FiniteField(p, m), FiniteField(p, n)
    elems = list(small.elements())
    for x, y in itertools.product(elems[:12], repeat=2):
        assert embed(x * y, big) == embed(x, big) * embed(y, big)
        assert embed(x + y, big) == embed(x, big) + embed(y, big)
    images = {embed(x, big) for x in elems}
    assert len(images) == len(elems)
    assert embedding_matrix(small, big).shape == (n, m)


def test_embedding_rejects_non_divisor(f4):
    with pytest.raises(ValueError):
        embed(f4.gen(), FiniteField(2, 3))


def test_subfield_elements_count():
    F = FiniteField(3, 4)
    assert len(F.subfield_elements(2)) == 9
    assert all(x.in_subfield(2) for x in F.subfield_elements(2))


def test_trace_lands_in_subfield():
    F = FiniteField(2, 4)
    for x in F.elements():
        tr = x.trace(2)
        assert tr.in_subfield(2)
        assert tr == x + x.frob(2)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=3, max_size=3), st.lists(st.integers(0, 4), min_size=3, max_size=3),
       st.lists(st.integers(0, 4), min_size=3, max_size=3))
def test_field_axioms_f125(a, b, c):
    F = FiniteField(5, 3)
    x, y, z = F(a), F(b), F(c)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y).frob() == x.frob() + y.frob()
    if x:
        assert x * x.inverse() == F.one()


def _order(x, n):
    from orepair.fields import prime_factors
    return all(x ** (n // r) != x.field.one() for r in prime_factors(n)) and x ** n == x.field.one()


@pytest.mark.parametrize("p,m", sorted(CONWAY))
def test_conway_table_is_primitive_and_compatible(p, m):
    F = FiniteField(p, m)
    assert tuple(F.modulus) == CONWAY[(p, m)]
    g = F.gen()
    assert _order(g, p ** m - 1)
    for d in range(1, m):
        if m % d:
            continue
        img = g ** ((p ** m - 1) // (p ** d - 1))
        value = F.zero()
        for c in reversed(CONWAY[(p, d)]):
            value = value * img + c
        assert value.is_zero()
