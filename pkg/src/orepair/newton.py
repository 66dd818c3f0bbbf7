"""Newton polygons of fractional power series, the zero measure, and the annihilator recurrence.

Points are ``(e, v)`` pairs: an exponent ``e`` (non-negative, with p-power
denominator) and the valuation of the coefficient of ``z^e``.  The lower
convex hull is built in exact rationals; a segment of slope ``s`` and
horizontal length ``L`` stands for ``L`` zeros (with multiplicity) of
valuation ``-s``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import inf
from typing import Iterable, Sequence

from .errors import PreconditionError
from .fields import FFElem, prime_power
from .puiseux import PuiseuxElem, PuiseuxField, split_exponent
from .twisted import TwistedPoly

Point = tuple[Fraction, Fraction]


def p_adic_valuation(e: Fraction, p: int) -> float | int:
    """v_p of a rational, ``inf`` at 0."""
    e = Fraction(e)
    if e == 0:
        return inf
    v = 0
    num, den = e.numerator, e.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


@dataclass(frozen=True)
class PolygonPointCloud:
    """Finite set {(e, v(a_e))} with distinct exponents e >= 0 in Z[1/p]."""

    points: tuple[Point, ...]
    p: int

    def __post_init__(self):
        pts = tuple(sorted((Fraction(e), Fraction(v)) for e, v in self.points))
        if not pts:
            raise PreconditionError("a point cloud needs at least one point")
        exps = [e for e, _ in pts]
        if len(set(exps)) != len(exps):
            raise PreconditionError("exponents in a point cloud must be distinct")
        for e in exps:
            if e < 0:
                raise PreconditionError(f"negative exponent {e}")
            split_exponent(e, self.p)
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple], p: int) -> "PolygonPointCloud":
        return cls(tuple(pairs), p)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def e_min(self) -> Fraction:
        return self.points[0][0]

    @property
    def e_max(self) -> Fraction:
        return self.points[-1][0]


@dataclass(frozen=True)
class Segment:
    start: Point
    end: Point

    @property
    def slope(self) -> Fraction:
        return (self.end[1] - self.start[1]) / (self.end[0] - self.start[0])

    @property
    def length(self) -> Fraction:
        return self.end[0] - self.start[0]


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: tuple[Point, ...]
    p: int
    segments: tuple[Segment, ...] = field(init=False)

    def __post_init__(self):
        segs = tuple(Segment(a, b) for a, b in zip(self.vertices, self.vertices[1:]))
        object.__setattr__(self, "segments", segs)

    @property
    def e_min(self) -> Fraction:
        return self.vertices[0][0]

    @property
    def e_max(self) -> Fraction:
        return self.vertices[-1][0]

    def slopes(self) -> list[tuple[Fraction, Fraction]]:
        """(slope, horizontal length) for each segment, slopes increasing."""
        return [(s.slope, s.length) for s in self.segments]

    def as_cloud(self) -> PolygonPointCloud:
        return PolygonPointCloud(self.vertices, self.p)


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def build_polygon(cloud: PolygonPointCloud) -> NewtonPolygon:
    """Lower convex hull; collinear interior points are dropped so slopes strictly increase."""
    hull: list[Point] = []
    for pt in cloud.points:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return NewtonPolygon(tuple(hull), cloud.p)


def zero_measure(poly: NewtonPolygon, s) -> Fraction:
    """Mass of zeros with valuation -s: the horizontal length of the slope-s segment."""
    s = Fraction(s)
    for seg in poly.segments:
        if seg.slope == s:
            return seg.length
    return Fraction(0)


def origin_atom(poly: NewtonPolygon) -> Fraction:
    """Mass e_min sitting at z = 0 (valuation +inf)."""
    return poly.e_min


def total_measure(poly: NewtonPolygon) -> Fraction:
    return sum((seg.length for seg in poly.segments), Fraction(0)) + origin_atom(poly)


def root_valuations(poly: NewtonPolygon) -> list[tuple[Fraction, Fraction]]:
    """(valuation of the zeros, mass) per segment."""
    return [(-seg.slope, seg.length) for seg in poly.segments]


def ell_r(poly: NewtonPolygon, s_cut) -> Fraction:
    """Total horizontal length of segments with slope below ``s_cut``."""
    s_cut = Fraction(s_cut)
    return sum((seg.length for seg in poly.segments if seg.slope < s_cut), Fraction(0))


def truncate_fn(cloud: PolygonPointCloud, n: int) -> PolygonPointCloud:
    """Keep the points whose exponent has p-adic valuation >= -n."""
    if n < 0:
        raise PreconditionError("truncation level must be >= 0")
    kept = [(e, v) for e, v in cloud.points if p_adic_valuation(e, cloud.p) >= -n]
    if not kept:
        raise PreconditionError(f"truncation at level {n} removes every point")
    return PolygonPointCloud(tuple(kept), cloud.p)


def dilate(cloud: PolygonPointCloud, n: int) -> PolygonPointCloud:
    """(e, v) -> (p^n e, p^n v): the cloud of f^(p^n)."""
    scale = Fraction(cloud.p) ** n
    return PolygonPointCloud(tuple((e * scale, v * scale) for e, v in cloud.points), cloud.p)


def max_pdenom(cloud: PolygonPointCloud) -> int:
    return max(split_exponent(e, cloud.p)[1] for e, _ in cloud.points)


def cloud_from_series(coeffs: dict, p: int) -> PolygonPointCloud:
    """Cloud of sum a_e z^e from a mapping exponent -> coefficient (zero coefficients skipped)."""
    pts = [(Fraction(e), c.valuation()) for e, c in coeffs.items() if not c.is_zero()]
    return PolygonPointCloud(tuple(pts), p)


def cloud_from_twisted(f: TwistedPoly) -> PolygonPointCloud:
    """Cloud of the F_q-linear series z -> sum a_n z^(q^n) over Puiseux coefficients."""
    if not isinstance(f.field, PuiseuxField):
        raise PreconditionError("valuations need Puiseux coefficients")
    pts = [(Fraction(f.q) ** n, c.valuation()) for n, c in f.items()]
    return PolygonPointCloud(tuple(pts), f.field.p)


# ----------------------------------------------------- annihilator recurrence

@dataclass
class AnnihilatorResult:
    h: TwistedPoly
    steps: list[TwistedPoly]
    c: list[PuiseuxElem]
    bounds: list[Fraction]
    """bounds[n] = v(c_n) = (1 - 1/q) v(h_n(lambda_{n+1})): the v-form bound on h_{n+1} - h_n."""
    diff_norms: list
    """Actual v-form norms of h_{n+1} - h_n (each is >= bounds[n])."""
    growth: list[Fraction]
    """Partial sums of v(lambda_n) q^-n (diagnostic only)."""

    def bounds_monotone(self) -> bool:
        """|c_n| nonincreasing, i.e. v(c_n) nondecreasing."""
        return all(a <= b for a, b in zip(self.bounds, self.bounds[1:]))

    def certified(self) -> bool:
        return all(d >= b for d, b in zip(self.diff_norms, self.bounds))


def fq_span(lambdas: Sequence, q: int, ring) -> list:
    """All F_q-combinations of ``lambdas`` (the prime field when q is prime, else F_q inside the base)."""
    base = ring.base if isinstance(ring, PuiseuxField) else ring
    p, e = prime_power(q)
    scalars = base.subfield_elements(e)
    out = []
    for coeffs in itertools.product(scalars, repeat=len(lambdas)):
        total = ring.zero()
        for c, lam in zip(coeffs, lambdas):
            total = total + lam * c
        out.append(total)
    return out


def check_descending(lambdas: Sequence[PuiseuxElem], q: int) -> None:
    """Each lambda_m must be a smallest nonzero element of span(lambda_0..lambda_m), with v >= 0."""
    if not lambdas:
        return
    ring = lambdas[0].field
    for lam in lambdas:
        if lam.is_zero():
            raise PreconditionError("descending-basis elements must be nonzero")
        if lam.valuation() < 0:
            raise PreconditionError("descending-basis elements need v >= 0")
    for m in range(1, len(lambdas) + 1):
        span = fq_span(lambdas[:m], q, ring)
        nonzero = [x for x in span if not x.is_zero()]
        if len(nonzero) != q ** m - 1:
            raise PreconditionError("lambdas are not F_q-independent")
        top = lambdas[m - 1].valuation()
        if any(x.valuation() > top for x in nonzero):
            raise PreconditionError(f"lambda_{m - 1} is not a smallest element of its span")


def build_annihilator(lambdas: Sequence[PuiseuxElem], q: int, field: PuiseuxField | None = None,
                      check: bool = True) -> AnnihilatorResult:
    """h_N via h_{n+1} = (1 - c_n tau^-1) o h_n, c_n = (h_n(lambda_{n+1})^(q-1))^(1/q)."""
    if field is None:
        if not lambdas:
            raise PreconditionError("an empty prefix needs an explicit field")
        field = lambdas[0].field
    if check:
        check_descending(lambdas, q)
    h = TwistedPoly.scalar(field, q, 1)
    steps, cs, bounds, diffs, growth = [h], [], [], [], []
    tau_inv = TwistedPoly.tau(field, q, -1)
    partial = Fraction(0)
    for n, lam in enumerate(lambdas):
        y = h(lam)
        if y.is_zero():
            raise PreconditionError("lambda lies in the span of its predecessors")
        c = (y ** (q - 1)).root_qn(1, q)
        step = -(c * tau_inv * h)
        h = h + step
        cs.append(c)
        bounds.append(c.valuation())
        diffs.append(step.norm().value)
        partial += Fraction(lam.valuation()) / Fraction(q) ** n
        growth.append(partial)
        steps.append(h)
    return AnnihilatorResult(h, steps, cs, bounds, diffs, growth)


def annihilator_by_product(lambdas: Sequence[PuiseuxElem], q: int, field: PuiseuxField | None = None) -> TwistedPoly:
    """Independent route: expand g_N = prod_{lambda in V_N} (z - lambda) and take its q^N-th root.

    g_N is F_q-linear, so only z^(q^i) terms survive; its z^(q^i) coefficient
    raised to 1/q^N is the tau^(i-N) coefficient of h_N.
    """
    if field is None:
        field = lambdas[0].field
    span = fq_span(list(lambdas), q, field) if lambdas else [field.zero()]
    poly = [field.one()]  # coefficients by ordinary degree
    for lam in span:
        nxt = [field.zero()] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - c * lam
        poly = nxt
    n_len = len(lambdas)
    coeffs = {}
    for deg, c in enumerate(poly):
        if c.is_zero():
            continue
        i = _log_q(deg, q)
        if i is None:
            raise PreconditionError(f"product has a non-additive term z^{deg}")
        coeffs[i - n_len] = c.root_qn(n_len, q)
    return TwistedPoly(field, q, coeffs)


def _log_q(n: int, q: int) -> int | None:
    i, power = 0, 1
    while power < n:
        power *= q
        i += 1
    return i if power == n else None
