from __future__ import annotations

from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings, strategies as st

from orepair import FiniteField, PuiseuxField, TwistedPoly
from orepair.errors import PreconditionError
from orepair.newton import (
    PolygonPointCloud,
    annihilator_by_product,
    build_annihilator,
    build_polygon,
    cloud_from_twisted,
    dilate,
    ell_r,
    fq_span,
    max_pdenom,
    origin_atom,
    root_valuations,
    total_measure,
    truncate_fn,
    zero_measure,
)


def cloud(pts, p=2):
    return PolygonPointCloud(tuple((Fr(e), Fr(v)) for e, v in pts), p)


def test_polygon_examples():
    assert build_polygon(cloud([(3, 1)])).segments == ()
    poly = build_polygon(cloud([(1, 0), (2, 1)]))
    assert poly.slopes() == [(1, 1)]
    poly = build_polygon(cloud([(0, 2), (1, 0), (3, 1)], p=3))
    assert poly.slopes() == [(-2, 1), (Fr(1, 2), 2)]


def test_collinear_points_merge():
    poly = build_polygon(cloud([(1, 0), (2, 1), (4, 3)]))
    assert poly.slopes() == [(1, 3)]


def test_zero_measure_examples():
    poly = build_polygon(cloud([(1, 0), (2, 1)]))
    assert zero_measure(poly, 1) == 1
    assert root_valuations(poly) == [(-1, 1)]
    assert zero_measure(poly, 5) == 0
    for q in (2, 3, 4):
        p = 3 if q == 3 else 2
        poly = build_polygon(cloud([(1, 1), (q, 0)], p=p))
        s = Fr(-1, q - 1)
        assert zero_measure(poly, s) == q - 1
        assert root_valuations(poly) == [(Fr(1, q - 1), q - 1)]


def test_cloud_of_twisted_family():
    K = PuiseuxField(FiniteField(2, 1))
    f = TwistedPoly(K, 2, {0: K.t(1), 1: K.one()})
    assert cloud_from_twisted(f).points == ((1, 1), (2, 0))


def test_ell_r_examples():
    poly = build_polygon(cloud([(0, 3), (1, 1), (2, 0), (4, 1)]))
    assert [s for s, _ in poly.slopes()] == [-2, -1, Fr(1, 2)]
    assert ell_r(poly, -5) == 0
    assert ell_r(poly, 10) == 4
    assert ell_r(poly, 0) == 2


def test_truncation_examples():
    c = cloud([(1, 0), (2, 1), (5, 2)])
    for n in range(4):
        assert truncate_fn(c, n) == c
    c = cloud([(Fr(1, 2), 0), (1, 1)])
    assert truncate_fn(c, 0).points == ((1, 1),)
    with pytest.raises(PreconditionError):
        truncate_fn(cloud([(Fr(1, 2), 0)]), 0)


def test_truncation_stabilizes():
    c = cloud([(Fr(1, 8), 3), (Fr(3, 4), 1), (1, 2), (Fr(5, 2), 0), (4, 1)])
    full = build_polygon(c)
    top = max_pdenom(c)
    assert top == 3
    for cut in (-1, 0, Fr(1, 2), 2):
        for n in range(top, top + 3):
            assert ell_r(build_polygon(truncate_fn(c, n)), cut) == ell_r(full, cut)


def test_origin_atom():
    poly = build_polygon(cloud([(2, 0), (4, 1)]))
    assert origin_atom(poly) == 2
    assert total_measure(poly) == 4


def test_invalid_clouds():
    with pytest.raises(PreconditionError):
        cloud([(Fr(1, 3), 0)], p=2)
    with pytest.raises(PreconditionError):
        cloud([(1, 0), (1, 2)])
    with pytest.raises(PreconditionError):
        cloud([(-1, 0)])


_pts = st.lists(
    st.tuples(st.integers(0, 40), st.integers(0, 3), st.integers(-10, 10), st.integers(1, 4)),
    min_size=1, max_size=10,
)


def _cloud_from(raw, p=2):
    seen = {}
    for num, s, vn, vd in raw:
        seen.setdefault(Fr(num, p ** s), Fr(vn, vd))
    return PolygonPointCloud(tuple(seen.items()), p)


@settings(max_examples=150, deadline=None)
@given(_pts, st.integers(0, 3))
def test_hull_properties(raw, n):
    c = _cloud_from(raw)
    poly = build_polygon(c)
    slopes = [s for s, _ in poly.slopes()]
    assert all(a < b for a, b in zip(slopes, slopes[1:]))
    assert build_polygon(poly.as_cloud()) == poly
    assert total_measure(poly) == c.e_max
    assert sum(zero_measure(poly, s) for s in slopes) == c.e_max - c.e_min
    # every cloud point lies on or above the hull
    for e, v in c.points:
        for seg in poly.segments:
            if seg.start[0] <= e <= seg.end[0]:
                assert v >= seg.start[1] + seg.slope * (e - seg.start[0])
    dpoly = build_polygon(dilate(c, n))
    assert [L for _, L in dpoly.slopes()] == [L * 2 ** n for _, L in poly.slopes()]


# ------------------------------------------------------------ annihilator

def test_annihilator_single_one():
    for p in (2, 3):
        K = PuiseuxField(FiniteField(p, 1))
        res = build_annihilator([K.one()], p)
        assert res.h == TwistedPoly(K, p, {0: 1, -1: -1})
        assert res.h == TwistedPoly.tau(K, p, -1) * TwistedPoly(K, p, {1: 1, 0: -1})


def test_annihilator_empty(K2):
    res = build_annihilator([], 2, K2)
    assert res.h == TwistedPoly.scalar(K2, 2, 1)


def test_annihilator_matches_product(K2):
    lambdas = [K2.one(), K2.t()]
    res = build_annihilator(lambdas, 2)
    assert res.h == annihilator_by_product(lambdas, 2)
    for n in range(len(lambdas) + 1):
        for x in fq_span(lambdas[:n], 2, K2):
            assert res.h(x).is_zero()
            assert res.steps[n](x).is_zero()
    assert res.bounds_monotone() and res.certified()


def test_annihilator_fractional_exponents():
    K = PuiseuxField(FiniteField(3, 1))
    lambdas = [K.one(), K.t(Fr(1, 3)) + K.t(2), K.t(Fr(4, 3))]
    res = build_annihilator(lambdas, 3)
    assert res.h == annihilator_by_product(lambdas, 3)
    assert all(res.h(x).is_zero() for x in fq_span(lambdas, 3, K))


def test_descending_precondition(K2):
    with pytest.raises(PreconditionError):
        build_annihilator([K2.t(), K2.one()], 2)
    with pytest.raises(PreconditionError):
        build_annihilator([K2.one(), K2.one()], 2)
