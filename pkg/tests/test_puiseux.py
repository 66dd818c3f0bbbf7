from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from orepair import FiniteField, PuiseuxField


def test_root_of_t(K2):
    assert K2.t().root_qn(1, 2) == K2.t(Fraction(1, 2))


def test_frobenius_additivity(K2):
    t = K2.t()
    assert (t + t * t) ** 2 == K2.t(2) + K2.t(4)


def test_valuation_of_product():
    F4 = FiniteField(2, 2)
    K = PuiseuxField(F4)
    x = K.monomial(F4.gen(), Fraction(1, 2)) * K.t(Fraction(3, 2))
    assert x.valuation() == 2


def test_valuation_of_zero_is_infinite(K2):
    assert K2.zero().valuation() == float("inf")


def _elem(K, terms):
    p = K.p
    out = K.zero()
    for num, s, c in terms:
        out = out + K.monomial(K.base(c), Fraction(num, p ** s))
    return out


_terms = st.lists(st.tuples(st.integers(0, 12), st.integers(0, 3), st.integers(1, 2)), min_size=1, max_size=4)


@settings(max_examples=80, deadline=None)
@given(_terms, _terms, st.integers(-3, 3))
def test_valuation_and_root_laws(a, b, n):
    K = PuiseuxField(FiniteField(3, 1))
    x, y = _elem(K, a), _elem(K, b)
    if x.is_zero() or y.is_zero():
        return
    assert (x * y).valuation() == x.valuation() + y.valuation()
    s = x + y
    if not s.is_zero():
        assert s.valuation() >= min(x.valuation(), y.valuation())
        if x.valuation() != y.valuation():
            assert s.valuation() == min(x.valuation(), y.valuation())
    assert x.root_qn(n, 3).pow_qn(n, 3) == x
    assert x.pow_qn(n, 3).valuation() == Fraction(3) ** n * x.valuation()
    assert x.root_qn(1, 3) ** 3 == x


def test_monomial_inverse(K2):
    x = K2.t(Fraction(3, 4))
    assert x * x.inverse() == K2.one()
