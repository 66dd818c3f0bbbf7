"""Seeded acceptance suite: thirteen property sweeps over desk-scale instances.

Each ``criterion_k(seed)`` builds its own ``random.Random`` from the seed and
the criterion number, so criteria can run in any order or in parallel and
still produce identical reports.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable

import numpy as np

from .drinfeld import APoly, DrinfeldModule, perfectness, tate_compat
from .fields import FiniteField, prime_power
from .kernels import (
    KernelPairing,
    ambient_for,
    annihilator,
    change_field_trace,
    concomitant_identity,
    concomitant_array,
    isotropy_check,
    kernel_basis,
    pairing_array,
    pairing_table,
)
from .newton import (
    PolygonPointCloud,
    annihilator_by_product,
    build_annihilator,
    build_polygon,
    dilate,
    ell_r,
    root_valuations,
    total_measure,
    zero_measure,
)
from .puiseux import PuiseuxField
from .reports import CheckReport
from .twisted import TwistedPoly, ore_divide_right, remainder_left, remainder_right

SUITE1_FIELDS = ((2, 1), (2, 2), (3, 1), (4, 1), (5, 1))


def _rng(seed: int, k: int) -> random.Random:
    return random.Random(f"ore-pair:{seed}:{k}")


def _field(q: int, m: int) -> FiniteField:
    p, e = prime_power(q)
    return FiniteField(p, e * m)


def random_poly(rng: random.Random, L: FiniteField, q: int, low: int, high: int,
                separable: bool = True) -> TwistedPoly:
    """Random f = sum_{low..high} a_n tau^n with a_low, a_high nonzero (and a_0 nonzero if separable)."""
    coeffs = {}
    for n in range(low, high + 1):
        nonzero = n in (low, high) or (separable and n == 0)
        coeffs[n] = L.random_element(rng, nonzero=nonzero)
    return TwistedPoly(L, q, coeffs)


def suite1_instances(seed: int) -> list[TwistedPoly]:
    rng = _rng(seed, 1)
    out = []
    for q, m in SUITE1_FIELDS:
        L = _field(q, m)
        for _ in range(25):
            out.append(random_poly(rng, L, q, 0, rng.randint(1, 3)))
    return out


# ------------------------------------------------------------ kernels

def criterion_1(seed: int) -> CheckReport:
    rep = CheckReport("pairing perfectness")
    dims = []
    for f in suite1_instances(seed):
        table = pairing_table(f)
        rep.record(table.is_perfect(), f"Gram not invertible for {f!r}")
        dims.append(table.dim)
    rep.details.update({"instances": len(dims), "max_dim": max(dims)})
    return rep


def _agree(rep: CheckReport, lhs: np.ndarray, rhs: np.ndarray, message: str) -> None:
    """Compare two value arrays of shape (rows, m, cols) pair by pair."""
    same = np.all(lhs == rhs, axis=1)
    rep.record_many(int(same.sum()), same.size, message)


def _pairs_t(arr: np.ndarray) -> np.ndarray:
    """Swap the two point axes of a (rows, m, cols) value array."""
    return arr.transpose(2, 1, 0)


def _full_tables(f: TwistedPoly):
    ambient = ambient_for(f, f.adjoint())
    ker = kernel_basis(f, ambient)
    kers = kernel_basis(f.adjoint(), ambient)
    return ambient, list(ker.elements()), list(kers.elements())


def criterion_2(seed: int) -> CheckReport:
    rep = CheckReport("antisymmetry")
    for f in suite1_instances(seed):
        ambient, alphas, betas = _full_tables(f)
        left = pairing_array(KernelPairing(f, ambient), alphas, betas)
        right = pairing_array(KernelPairing(f.adjoint(), ambient), betas, alphas)
        _agree(rep, left, (-_pairs_t(right)) % ambient.p, f"antisymmetry fails for {f!r}")
    return rep


def criterion_3(seed: int) -> CheckReport:
    rng = _rng(seed, 3)
    rep = CheckReport("compatibility")
    choices = ((2, 1), (2, 2), (3, 1))
    for k in range(25):
        q, m = choices[k % len(choices)]
        L = _field(q, m)
        f = random_poly(rng, L, q, 0, rng.randint(1, 2))
        h = random_poly(rng, L, q, 0, rng.randint(1, 2))
        fh = f * h
        ambient = ambient_for(fh, fh.adjoint())
        p_fh = KernelPairing(fh, ambient)
        p_f = KernelPairing(f, ambient)
        p_h = KernelPairing(h, ambient)
        h_m, f_star = h.change_field(ambient), f.adjoint().change_field(ambient)
        # <a, b>_{f o h} = <h(a), b>_f  for a in ker(f o h), b in ker f*
        alphas = list(kernel_basis(fh, ambient).elements())
        betas = list(kernel_basis(f.adjoint(), ambient).elements())
        lhs = pairing_array(p_fh, alphas, betas)
        rhs = pairing_array(p_f, [h_m(a) for a in alphas], betas)
        _agree(rep, lhs, rhs, f"right compatibility fails for f={f!r}, h={h!r}")
        # <a, b>_{f o h} = <a, f*(b)>_h  for a in ker h, b in ker (f o h)*
        alphas = list(kernel_basis(h, ambient).elements())
        betas = list(kernel_basis(fh.adjoint(), ambient).elements())
        lhs = pairing_array(p_fh, alphas, betas)
        rhs = pairing_array(p_h, alphas, [f_star(b) for b in betas])
        _agree(rep, lhs, rhs, f"left compatibility fails for f={f!r}, h={h!r}")
    return rep


def criterion_4(seed: int) -> CheckReport:
    rng = _rng(seed, 4)
    rep = CheckReport("annihilator")
    choices = ((2, 1), (2, 2), (3, 1), (5, 1))
    for k in range(10):
        q, m = choices[k % len(choices)]
        L = _field(q, m)
        h = random_poly(rng, L, q, 0, rng.randint(1, 2))
        g = random_poly(rng, L, q, 0, rng.randint(1, 2))
        f = h * g
        ambient = ambient_for(f, f.adjoint())
        ker_g = kernel_basis(g, ambient)
        ann = annihilator(f, list(ker_g.basis), ambient)
        ker_hs = kernel_basis(h.adjoint(), ambient)
        rep.record(set(ann.elements()) == set(ker_hs.elements()), f"annihilator != ker h* for {f!r}")
    return rep


def criterion_5(seed: int) -> CheckReport:
    rng = _rng(seed, 5)
    rep = CheckReport("concomitant")
    kernel_pairs = random_pairs = 0
    for f in suite1_instances(seed):
        ambient, alphas, betas = _full_tables(f)
        pv = pairing_array(KernelPairing(f, ambient), alphas, betas)
        bv = concomitant_array(f, alphas, betas, ambient)
        kernel_pairs += len(alphas) * len(betas)
        _agree(rep, bv, pv, f"B != pairing for {f!r}")
        for _ in range(50):
            random_pairs += 1
            u, v = ambient.random_element(rng), ambient.random_element(rng)
            rep.record(concomitant_identity(f, u, v), f"defining identity fails for {f!r}")
    rep.details.update({"kernel_pairs": kernel_pairs, "random_pairs": random_pairs})
    return rep


def criterion_6(seed: int) -> CheckReport:
    rng = _rng(seed, 6)
    rep = CheckReport("char-2 isotropy")
    for k in range(10):
        L = FiniteField(2, 1 + k % 2)
        h = random_poly(rng, L, 2, 0, rng.randint(1, 2))
        f = h.adjoint() * h
        rep.merge(isotropy_check(f, h, full_limit=10 ** 6))
    return rep


def anti_self_adjoint(rng: random.Random, L: FiniteField, q: int, reach: int) -> TwistedPoly:
    """Random f with f* = -f and terms tau^-reach .. tau^reach (a_0 = 0 is forced in odd characteristic)."""
    e = prime_power(q)[1]
    coeffs = {}
    for n in range(1, reach + 1):
        a = L.random_element(rng, nonzero=(n == reach))
        coeffs[n] = a
        coeffs[-n] = -a.frob(-e * n)
    return TwistedPoly(L, q, coeffs)


def criterion_7(seed: int) -> CheckReport:
    rng = _rng(seed, 7)
    rep = CheckReport("symmetry")
    for k in range(10):
        if k < 5:
            f = anti_self_adjoint(rng, FiniteField(5, 2), 5, 1)
        else:
            f = anti_self_adjoint(rng, FiniteField(5, 1), 5, 2)
        ambient = ambient_for(f)
        elems = list(kernel_basis(f, ambient).elements())
        vals = pairing_array(KernelPairing(f, ambient), elems, elems)
        _agree(rep, vals, _pairs_t(vals), f"Gram not symmetric for {f!r}")
    return rep


def criterion_8(seed: int) -> CheckReport:
    rng = _rng(seed, 8)
    rep = CheckReport("trace change of field")
    L = FiniteField(2, 2)
    for _ in range(5):
        top = rng.randint(1, 2)
        coeffs = {2 * n: L.random_element(rng, nonzero=n in (0, top)) for n in range(top + 1)}
        f = TwistedPoly(L, 2, coeffs)
        rep.merge(change_field_trace(f, 4, full_limit=10 ** 6))
    return rep


def criterion_9(seed: int) -> CheckReport:
    rng = _rng(seed, 9)
    rep = CheckReport("remainder lemmas")
    fields = [(_field(q, m), q) for q, m in SUITE1_FIELDS] + [(FiniteField(3, 2), 3)]
    puiseux = [PuiseuxField(FiniteField(2, 2)), PuiseuxField(FiniteField(3, 1))]
    for k in range(200):
        if k % 5 == 4:
            K = puiseux[k % 2]
            q = K.p
            coeffs = {}
            for n in range(rng.randint(-3, 0), rng.randint(0, 3) + 1):
                if rng.random() < 0.8:
                    e = Fraction(rng.randint(-4, 8), K.p ** rng.randint(0, 2))
                    coeffs[n] = K.t(e, K.base.random_element(rng, nonzero=True))
            f = TwistedPoly(K, q, coeffs)
            one = K.one()
        else:
            L, q = fields[k % len(fields)]
            f = random_poly(rng, L, q, rng.randint(-3, 0), rng.randint(0, 3), separable=False)
            one = L.one()
        one_minus_tau = TwistedPoly(f.field, q, {0: 1, 1: -1})
        qr, c = remainder_right(f)
        ok = qr * one_minus_tau + c == f and c == f(one)
        rep.record(ok, f"right remainder fails for {f!r}")
        ql, c2 = remainder_left(f)
        ok = one_minus_tau * ql + c2 == f and c2 == f.adjoint()(one)
        rep.record(ok, f"left remainder fails for {f!r}")
    return rep


def _contained(g: TwistedPoly, f: TwistedPoly) -> bool:
    ker = kernel_basis(g)
    lifted = f.change_field(ker.ambient)
    return all(lifted(z).is_zero() for z in ker.basis)


def criterion_10(seed: int) -> CheckReport:
    rng = _rng(seed, 10)
    rep = CheckReport("factorization")
    choices = ((2, 1), (2, 2), (3, 1), (5, 1))
    positives = negatives = 0
    for k in range(100):
        q, m = choices[k % len(choices)]
        L = _field(q, m)
        shift = rng.randint(-1, 1)
        g = random_poly(rng, L, q, 0, rng.randint(1, 2)).shifted(shift)
        if k < 50:
            h = random_poly(rng, L, q, rng.randint(-1, 0), rng.randint(0, 2), separable=False)
            f = h * g
        else:
            # random f, redrawn until g does not divide it
            for _ in range(100):
                f = random_poly(rng, L, q, rng.randint(-1, 0), rng.randint(1, 3))
                if not ore_divide_right(f, g)[1].is_zero():
                    break
        quo, r = ore_divide_right(f, g)
        rep.record(quo * g + r == f, "division round trip fails")
        divides = r.is_zero()
        contained = _contained(g, f)
        rep.record(divides == contained, f"r = 0 and ker g in ker f disagree for f={f!r}, g={g!r}")
        rep.record(divides == (k < 50), "instance landed on the wrong side")
        positives += divides
        negatives += not divides
    rep.details.update({"divisible": positives, "not_divisible": negatives})
    return rep


# ------------------------------------------------------------ newton

def _random_cloud(rng: random.Random, p: int) -> PolygonPointCloud:
    exps = set()
    while len(exps) < rng.randint(1, 7):
        exps.add(Fraction(rng.randint(0, 40), p ** rng.randint(0, 2)))
    pts = tuple((e, Fraction(rng.randint(-10, 10), rng.randint(1, 4))) for e in sorted(exps))
    return PolygonPointCloud(pts, p)


def criterion_11(seed: int) -> CheckReport:
    rng = _rng(seed, 11)
    rep = CheckReport("Newton polygon measure")
    # z + t z^2 over F_2((t)): the nonzero root is z = 1/t
    K = PuiseuxField(FiniteField(2, 1))
    t = K.t(1)
    poly = build_polygon(PolygonPointCloud(((1, 0), (2, 1)), 2))
    z = K.t(-1)
    rep.record(z + t * z * z == 0, "1/t is not a root of z + t z^2")
    rep.record(root_valuations(poly) == [(z.valuation(), 1)], "z + t z^2: segment data")
    rep.record(zero_measure(poly, 1) == 1, "z + t z^2: mu(v = -1) != 1")
    # t z + z^q: q - 1 nonzero roots with z^(q-1) = -t, so v(z) = 1/(q-1)
    for q in (2, 3, 4):
        p = prime_power(q)[0]
        poly = build_polygon(PolygonPointCloud(((1, 1), (q, 0)), p))
        rep.record(root_valuations(poly) == [(Fraction(1, q - 1), q - 1)], f"t z + z^{q}: segment data")
        rep.record(zero_measure(poly, Fraction(-1, q - 1)) == q - 1, f"t z + z^{q}: mu")
        if q == 2:
            rep.record(t * t + t ** 2 == 0, "t is not a root of t z + z^2")
    for _ in range(100):
        p = rng.choice((2, 3, 5))
        cloud = _random_cloud(rng, p)
        poly = build_polygon(cloud)
        rep.record(total_measure(poly) == cloud.e_max, "total mass != sup exponent")
    for _ in range(100):
        p = rng.choice((2, 3, 5))
        cloud = _random_cloud(rng, p)
        n = rng.randint(1, 3)
        s_cut = Fraction(rng.randint(-12, 12), rng.randint(1, 4))
        base, dil = build_polygon(cloud), build_polygon(dilate(cloud, n))
        rep.record(ell_r(dil, s_cut) == p ** n * ell_r(base, s_cut), "dilation law fails")
        rep.record(
            [length for _, length in dil.slopes()] == [p ** n * length for _, length in base.slopes()],
            "dilated lengths",
        )
    return rep


def random_descending(rng: random.Random, K: PuiseuxField, length: int) -> list:
    """lambda_n = c t^(v_n) + (higher term), v_n strictly increasing: always a descending prefix."""
    p = K.p
    lambdas, v = [], Fraction(0)
    for n in range(length):
        v = v + Fraction(rng.randint(0 if n == 0 else 1, 4), p ** rng.randint(0, 1))
        lam = K.t(v, K.base.random_element(rng, nonzero=True))
        if rng.random() < 0.5:
            lam = lam + K.t(v + Fraction(rng.randint(1, 3), p ** rng.randint(0, 1)),
                            K.base.random_element(rng, nonzero=True))
        lambdas.append(lam)
    return lambdas


def criterion_12(seed: int) -> CheckReport:
    rng = _rng(seed, 12)
    rep = CheckReport("annihilator construction")
    for p in (2, 3):
        K = PuiseuxField(FiniteField(p, 1))
        for length in (1, 2, 3):
            for _ in range(3):
                lambdas = random_descending(rng, K, length)
                res = build_annihilator(lambdas, p)
                rep.record(res.h == annihilator_by_product(lambdas, p), "recurrence != product")
                rep.record(res.bounds_monotone(), "bounds not monotone")
                rep.record(res.certified(), "difference norm exceeds bound")
                rep.record(all(res.h(lam).is_zero() for lam in lambdas), "h_N does not kill the prefix")
    return rep


# ------------------------------------------------------------ drinfeld

def carlitz_f4() -> DrinfeldModule:
    L = FiniteField(2, 2)
    return DrinfeldModule.from_coeffs(L, 2, [L.gen(), 1])


def rank2_f9() -> DrinfeldModule:
    L = FiniteField(3, 2)
    w = L.gen()
    return DrinfeldModule.from_coeffs(L, 3, [w, 1, w])


def criterion_13(seed: int) -> CheckReport:
    rep = CheckReport("Drinfeld pairing")
    cases = []
    c = carlitz_f4()
    t = c.t()
    cases += [(c, a) for a in (t, t + 1, t * t + t)]
    d = rank2_f9()
    t = d.t()
    cases += [(d, a) for a in (t, t + 1, t + 2)]
    for phi, a in cases:
        res = perfectness(phi, a)
        rep.merge(res.report)
        rep.merge(tate_compat(phi, a, 1))
    rep.details["cases"] = len(cases)
    return rep


CRITERIA: dict[int, Callable[[int], CheckReport]] = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
    11: criterion_11, 12: criterion_12, 13: criterion_13,
}


def _run_one(args: tuple[int, int]) -> dict:
    k, seed = args
    rep = CRITERIA[k](seed)
    out = rep.to_dict()
    out["criterion"] = k
    return out


def run_suite(seed: int, jobs: int = 1, only: list[int] | None = None) -> list[dict]:
    ks = sorted(only) if only else sorted(CRITERIA)
    tasks = [(k, seed) for k in ks]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_one, tasks))
    return [_run_one(t) for t in tasks]


def format_table(results: list[dict]) -> str:
    lines = [f"{'#':>3}  {'property':<28} {'result':<6} {'checked':>8} {'failures':>8}"]
    for r in results:
        status = "PASS" if r["passed"] else "FAIL"
        lines.append(f"{r['criterion']:>3}  {r['name']:<28} {status:<6} {r['checked']:>8} {r['failures']:>8}")
    return "\n".join(lines)
