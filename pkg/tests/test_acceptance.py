"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line (printed in the terminal summary by
``conftest.py``, or directly when this file is run as a script).  Runtime
bounds are part of each criterion.
"""

import cmath
import functools
import math
import random
import time

from hgschottky.apollonius import (
    apollonius_family, concentric_centers, concentricity, pairing_map,
)
from hgschottky.disk import circle_residual, complement, contains, from_center_radius, map_disk
from hgschottky.loops import LoopKind, audit_profile, default_profile, trace_loop
from hgschottky.loops import base_point
from hgschottky.schottky import certify, check_nesting, orbit_sample, reduced_words
from hgschottky.special import (
    GammaPole, HGParams, circuit_matrices, complex_gamma, gamma2_fixed_points, g_function,
)
from hgschottky.sphere import MoebiusMap, SpherePoint, fixed_points

RESULTS = []


def record(number, title, checks, elapsed, limit):
    checks = dict(checks)
    checks[f"runtime {elapsed:.2f} s < {limit} s"] = elapsed < limit
    ok = all(checks.values())
    failed = [k for k, v in checks.items() if not v]
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number:2d}  {title}  ({elapsed:.2f} s)"
    if failed:
        line += "  failed: " + "; ".join(failed)
    RESULTS.append(line)
    return ok, failed


def check(number, title, checks, elapsed, limit):
    ok, failed = record(number, title, checks, elapsed, limit)
    assert ok, failed


def random_params(rng):
    while True:
        a, b, c = (complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(3))
        try:
            return HGParams(a, b, c).check_nondegenerate()
        except GammaPole:
            continue


def random_pair(rng):
    while True:
        c1 = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        c2 = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        r1, r2 = rng.uniform(0.1, 1.5), rng.uniform(0.1, 1.5)
        if abs(c1 - c2) > r1 + r2 + 0.01:
            return from_center_radius(c1, r1), from_center_radius(c2, r2)


@functools.lru_cache(maxsize=None)
def traced(kind):
    t = time.perf_counter()
    report = trace_loop(kind)
    return report, time.perf_counter() - t


@functools.lru_cache(maxsize=None)
def base_config():
    return base_point(0.2, 6, 5)


def test_criterion_01_gamma_reflection():
    t = time.perf_counter()
    # 20 x 20 grid; real parts are -4.8 + k/2, never an integer
    xs = [-4.8 + 0.5 * k for k in range(20)]
    ys = [-3 + 6 * k / 19 for k in range(20)]
    worst = 0.0
    for x in xs:
        for y in ys:
            z = complex(x, y)
            v = complex_gamma(z) * complex_gamma(1 - z) * cmath.sin(math.pi * z) / math.pi
            worst = max(worst, abs(v - 1))
    el = time.perf_counter() - t
    check(1, "Gamma reflection", {f"max error {worst:.2e} <= 1e-11": worst <= 1e-11}, el, 1)


def test_criterion_02_fixed_point_oracle():
    t = time.perf_counter()
    rng = random.Random(2)
    worst = 0.0
    for _ in range(100):
        p = random_params(rng)
        _, g2 = circuit_matrices(p)
        f2, f2p = (SpherePoint.of(z) for z in gamma2_fixed_points(p))
        e1, e2 = fixed_points(g2)
        d = min(max(f2.chordal(e1), f2p.chordal(e2)), max(f2.chordal(e2), f2p.chordal(e1)))
        worst = max(worst, float(d))
    el = time.perf_counter() - t
    check(2, "fixed-point oracle", {f"max chordal {worst:.2e} <= 1e-9": worst <= 1e-9}, el, 5)


def test_criterion_03_alpha_identity():
    t = time.perf_counter()
    rng = random.Random(3)
    worst = 0.0
    for _ in range(50):
        p = random_params(rng)
        f2, f2p = gamma2_fixed_points(p)
        alpha = g_function(p.a, p.c) * g_function(p.b, p.c)
        worst = max(worst, abs(alpha - f2p / f2) / max(1.0, abs(alpha)))
    el = time.perf_counter() - t
    check(3, "alpha = g(a) g(b)", {f"max scaled error {worst:.2e} <= 1e-10": worst <= 1e-10}, el, 2)


def test_criterion_04_concentric_centers():
    t = time.perf_counter()
    rng = random.Random(4)
    worst, inside, intervals = 0.0, True, True
    for _ in range(50):
        D, Dp = random_pair(rng)
        pair = concentric_centers(D, Dp)
        worst = max(worst, concentricity(D, Dp, pair.F))
        inside &= contains(D, pair.F) == "inside" and contains(Dp, pair.Fp) == "inside"
        lo, hi = pair.interval
        lo_p, hi_p = pair.interval_p
        intervals &= lo < pair.eta < hi and lo_p < pair.eta_p < hi_p
    el = time.perf_counter() - t
    check(4, "concentric centers F, F'", {
        f"max center offset {worst:.2e} <= 1e-8": worst <= 1e-8,
        "F in D and F' in D'": inside,
        "eta roots in their intervals": intervals,
    }, el, 2)


def test_criterion_05_pairing_family():
    t = time.perf_counter()
    rng = random.Random(5)
    worst_res, worst_spread, lox = 0.0, 0.0, True
    for _ in range(20):
        D, Dp = random_pair(rng)
        c, r = complex(Dp.center), float(Dp.radius)
        fp = c + rng.uniform(0, 0.9) * r * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        data = apollonius_family(D, Dp, fp)
        mods = []
        for k in range(64):
            g = pairing_map(data, phase=2 * math.pi * k / 64)
            lox &= g.kind == "loxodromic"
            worst_res = max(worst_res, circle_residual(map_disk(g, D), complement(Dp)))
            mods.append(float(abs(g.multiplier)))
        worst_spread = max(worst_spread, max(mods) - min(mods))
    el = time.perf_counter() - t
    check(5, "pairing-map family", {
        "all loxodromic": lox,
        f"max circle residual {worst_res:.2e} <= 1e-9": worst_res <= 1e-9,
        f"max |m| spread {worst_spread:.2e} <= 1e-10": worst_spread <= 1e-10,
    }, el, 10)


def test_criterion_06_alpha_around_d0():
    report, el = traced(LoopKind.ALPHA_AROUND_D0)
    pp = report.phi_psi.check(1e-8)
    w = report.winding_alpha
    check(6, "loop alpha around D_0", {
        "audit": report.audit.ok,
        "64 samples": len(report.samples) == 64,
        f"certificates with margin >= 1e-6 (min {report.min_margin:.3g})": report.checks["certificates"],
        f"winding of alpha around 0 = 1 (measured {w:.6f})": abs(w - 1) < 1e-6,
        f"delta arg multiplier = -2 pi (measured {report.delta_arg_multiplier:.9f})":
            abs(report.delta_arg_multiplier + 2 * math.pi) <= 1e-6,
        f"endpoint configs agree (residual {report.closure_residual:.1e})": report.closure_residual <= 1e-8,
        **pp,
    }, el, 30)


def test_criterion_07_alpha_around_d1():
    report, el = traced(LoopKind.ALPHA_AROUND_D1)
    audit = audit_profile(LoopKind.ALPHA_AROUND_D1)
    numbered = [c for c in audit.checks if c.name[:3] in ("(1)", "(2a", "(2b", "(3)")]
    a0 = complex(report.samples[0].alpha)
    half = complex(report.samples[len(report.samples) // 2].alpha)
    check(7, "loop alpha around D_1", {
        "inequalities (1)(2)(3) with positive slack": len(numbered) >= 4 and all(c.slack > 0 for c in numbered),
        f"|winding around 1| = 1 (measured {report.winding_alpha:.6f})":
            abs(abs(report.winding_alpha) - 1) < 1e-6,
        "alpha(0) = alpha(1) < 1 < |alpha(1/2)|":
            report.closure_residual <= 1e-8 and abs(a0.imag) < 1e-9 and a0.real < 1 < abs(half),
        "certificates": report.checks["certificates"] and report.checks["endpoint certificate"],
    }, el, 30)


def test_criterion_08_multiplier_gamma2():
    report, el = traced(LoopKind.MULTIPLIER_GAMMA2)
    check(8, "loop of the gamma2 multiplier", {
        "alpha in disk(eps, r)": report.checks["alpha in disk(eps, r)"],
        "eps^2 (1 + r) < eps - r <= |alpha| <= eps + r < 1":
            report.checks["eps^2 (1 + r) < eps - r <= |alpha| <= eps + r < 1"],
        f"winding of alpha around 0 = 0 (measured {report.winding_alpha:.6f})": abs(report.winding_alpha) < 1e-6,
        f"delta arg multiplier = -2 pi (measured {report.delta_arg_multiplier:.9f})":
            abs(report.delta_arg_multiplier + 2 * math.pi) <= 1e-6,
        "certificates": report.checks["certificates"] and report.checks["endpoint certificate"],
    }, el, 30)


def test_criterion_09_multiplier_gamma1():
    report, el = traced(LoopKind.MULTIPLIER_GAMMA1)
    profile = report.profile
    dual = trace_loop(LoopKind.MULTIPLIER_GAMMA2, profile.dual()) \
        if profile.dual() != default_profile(LoopKind.MULTIPLIER_GAMMA2) else traced(LoopKind.MULTIPLIER_GAMMA2)[0]
    worst, swapped = 0.0, True
    for s, d in zip(report.samples, dual.samples):
        worst = max(worst, abs(s.m1 - d.m2) / abs(d.m2))
        q = d.params
        swapped &= abs(s.params.c - (q.a + q.b + 1 - q.c)) < 1e-14 and s.params.a == q.a and s.params.b == q.b
    check(9, "loop of the gamma1 multiplier", {
        "parameters are c -> a + b + 1 - c of the gamma2 loop": swapped and len(report.samples) == len(dual.samples),
        f"gamma1 multipliers match (max rel. error {worst:.1e})": worst <= 1e-9,
        "certificates": report.checks["certificates"] and report.checks["endpoint certificate"],
    }, el, 30)


def test_criterion_10_nesting():
    cfg = base_config()
    t = time.perf_counter()
    rep = check_nesting(cfg, 6)
    counts = all(len(reduced_words(d)) == 4 * 3 ** (d - 1) for d in range(1, 7))
    n_points = len(orbit_sample(cfg, 6))
    el = time.perf_counter() - t
    check(10, "ping-pong nesting, depth 6", {
        f"{rep.points_checked} orbit points nested": not rep.failures,
        "4 * 3^(d-1) reduced words per depth": counts and rep.ok,
        "orbit sample size matches": n_points == 4 + rep.points_checked,
    }, el, 10)


def test_criterion_11_conjugation_invariance():
    cfg = base_config()
    t = time.perf_counter()
    base = certify(cfg).passes(1e-6)
    rng = random.Random(11)
    verdicts = []
    for _ in range(20):
        while True:
            T = MoebiusMap(*(complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(4)))
            if abs(T.p * T.s - T.q * T.r) > 0.1:
                break
        verdicts.append(certify(cfg.transported(T)).passes(1e-6))
    el = time.perf_counter() - t
    check(11, "certificate Moebius invariance", {
        "base configuration passes": base,
        f"{sum(v == base for v in verdicts)}/20 conjugates agree": all(v == base for v in verdicts),
    }, el, 5)


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(RESULTS))
