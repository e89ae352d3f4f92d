import cmath
import math
import random

import pytest
from hgschottky._prec import mpf

from hgschottky.apollonius import (
    DisksNotDisjoint, PhaseRequired, PointNotInterior, PointNotOnA, apollonius_family,
    concentric_centers, concentricity, pairing_map, point_on_circle, solve_eta, to_infinity_map,
)
from hgschottky.disk import complement, contains, from_center_radius, map_disk, outside, same_circle
from hgschottky.sphere import INF, MoebiusMap, SpherePoint, apply, fixed_points


def random_pair(rng):
    while True:
        c1 = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        c2 = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        r1, r2 = rng.uniform(0.1, 1.5), rng.uniform(0.1, 1.5)
        if abs(c1 - c2) > r1 + r2 + 0.05:
            return from_center_radius(c1, r1), from_center_radius(c2, r2)


def random_interior(rng, X):
    c, r = complex(X.center), float(X.radius)
    return c + rng.uniform(0, 0.9) * r * cmath.exp(1j * rng.uniform(0, 2 * math.pi))


def test_symmetric_pair():
    D, Dp = from_center_radius(-2, 1), from_center_radius(2, 1)
    cp = concentric_centers(D, Dp)
    F, Fp = complex(cp.F.value), complex(cp.Fp.value)
    assert abs(F + Fp) < 1e-12 and abs(F.imag) < 1e-12
    assert abs(abs(F) - math.sqrt(3)) < 1e-12
    assert contains(D, cp.F) == "inside" and contains(Dp, cp.Fp) == "inside"


def test_eta_roots_in_intervals():
    eta, eta_p, iv, iv_p = solve_eta(5, 1, 2)
    for x in (eta, eta_p):
        assert abs(x * x + (-1 + mpf(1 - 4) / 25) * x + mpf(4) / 25) < 1e-40
    assert 0 < eta_p < 2 / 5 and 1 - 1 / 5 < eta < 1


def test_concentric_after_transport():
    D, Dp = from_center_radius(0, 1), from_center_radius(5, 2)
    cp = concentric_centers(D, Dp)
    assert concentricity(D, Dp, cp.F) < 1e-8
    # any other map sending F to infinity works too
    T = MoebiusMap(3 + 1j, 1, 0, 1) @ to_infinity_map(cp.F)
    E, Ep = map_disk(T, D), map_disk(T, Dp)
    assert abs(E.center - Ep.center) / min(E.radius, Ep.radius) < 1e-8


def test_boundaries_are_apollonius_circles():
    rng = random.Random(4)
    for _ in range(5):
        D, Dp = random_pair(rng)
        cp = concentric_centers(D, Dp)
        F, Fp = complex(cp.F.value), complex(cp.Fp.value)
        for X in (D, Dp):
            c, r = complex(X.center), float(X.radius)
            ratios = [abs(z - F) / abs(z - Fp)
                      for z in (c + r * cmath.exp(2j * math.pi * k / 16) for k in range(16))]
            assert (max(ratios) - min(ratios)) / max(ratios) <= 1e-8


def test_uniqueness_of_f():
    D, Dp = from_center_radius(0, 1), from_center_radius(5, 2)
    cp = concentric_centers(D, Dp)
    F = complex(cp.F.value)
    for k in range(8):
        G = F + 1e-3 * cmath.exp(2j * math.pi * k / 8)
        assert concentricity(D, Dp, G) > 1e-5


def test_disks_containing_infinity():
    D = from_center_radius(0, 1)
    Dp = outside(0, 4)
    cp = concentric_centers(D, Dp)
    # concentric circles already: F = 0, F' = inf
    assert cp.F.chordal(SpherePoint.of(0)) < 1e-9 and cp.Fp.chordal(INF) < 1e-9


def test_not_disjoint():
    with pytest.raises(DisksNotDisjoint):
        concentric_centers(from_center_radius(0, 1), from_center_radius(1.5, 1))


def test_normal_form_family():
    c, r = 0.1 + 0.05j, 1.0
    D = from_center_radius(c, r)
    Dp = complement(from_center_radius(3 * c, 3 * r))
    data = apollonius_family(D, Dp, INF)
    assert abs(data.abs_m - 3) < 1e-12
    # A: |f - c'| = |m| |f - c| lies in D
    for k in range(16):
        f = complex(point_on_circle(data, 2 * math.pi * k / 16).value)
        assert abs(abs(f - 3 * c) - 3 * abs(f - c)) < 1e-10
        assert contains(D, f) == "inside"
    g = pairing_map(data, phase=0.0)
    f = complex(point_on_circle(data, 0.0).value)
    assert apply(g, 1 + f).close(3 + f, 1e-10)  # z -> 3 (z - f) + f
    assert same_circle(map_disk(g, D), complement(Dp))


def test_degenerate_case():
    D, Dp = from_center_radius(-2, 1), from_center_radius(2, 1)
    cp = concentric_centers(D, Dp)
    data = apollonius_family(D, Dp, cp.Fp)
    assert data.degenerate and data.circle is None
    for phase in (0.0, 1.0, 4.0):
        g = pairing_map(data, phase=phase)
        assert same_circle(map_disk(g, D), complement(Dp))
        rep, att = fixed_points(g)
        assert {round(complex(p.value).real, 9) for p in (rep, att)} == \
            {round(complex(cp.F.value).real, 9), round(complex(cp.Fp.value).real, 9)}
    with pytest.raises(PhaseRequired):
        pairing_map(data, point=cp.F)


def test_point_not_interior_and_not_on_a():
    D, Dp = from_center_radius(0, 1), from_center_radius(5, 2)
    with pytest.raises(PointNotInterior):
        apollonius_family(D, Dp, 0.0)
    data = apollonius_family(D, Dp, 5.3)
    with pytest.raises(PointNotOnA):
        pairing_map(data, point=0.0 + 0.999j)
    with pytest.raises(ValueError):
        pairing_map(data)


def test_family_pairs_disks_and_localizes_fixed_points():
    rng = random.Random(8)
    for _ in range(5):
        D, Dp = random_pair(rng)
        fp = random_interior(rng, Dp)
        data = apollonius_family(D, Dp, fp)
        for k in range(16):
            g = pairing_map(data, phase=2 * math.pi * k / 16 + 0.1)
            assert g.kind == "loxodromic"
            assert same_circle(map_disk(g, D), complement(Dp))
            assert abs(abs(g.multiplier) - data.abs_m) <= 1e-10 * data.abs_m
            rep, att = fixed_points(g)
            inD = [contains(D, p) for p in (rep, att)]
            inDp = [contains(Dp, p) for p in (rep, att)]
            assert "inside" in inD and "inside" in inDp


def test_point_and_phase_agree_and_round_trip():
    rng = random.Random(12)
    D, Dp = random_pair(rng)
    fp = random_interior(rng, Dp)
    data = apollonius_family(D, Dp, fp)
    f = point_on_circle(data, 1.3)
    g1 = pairing_map(data, phase=1.3)
    g2 = pairing_map(data, point=f)
    assert same_circle(map_disk(g1, D), map_disk(g2, D))
    # rebuild from fixed points and multiplier
    from hgschottky.sphere import from_fixed_points_multiplier
    rep, att = fixed_points(g1)
    g3 = from_fixed_points_multiplier(rep, att, g1.multiplier)
    assert same_circle(map_disk(g3, D), complement(Dp))


def test_phase_to_point_winds_once():
    rng = random.Random(13)
    D, Dp = random_pair(rng)
    data = apollonius_family(D, Dp, random_interior(rng, Dp))
    c = complex(data.circle.center)
    args = [cmath.phase(complex(point_on_circle(data, 2 * math.pi * k / 64).value) - c) for k in range(65)]
    total = sum((b - a + math.pi) % (2 * math.pi) - math.pi for a, b in zip(args, args[1:]))
    assert abs(abs(total) - 2 * math.pi) < 1e-9
    steps = [(b - a + math.pi) % (2 * math.pi) - math.pi for a, b in zip(args, args[1:])]
    assert all(s > 0 for s in steps) or all(s < 0 for s in steps)


def test_abs_m_independent_of_transport():
    rng = random.Random(14)
    D, Dp = random_pair(rng)
    fp = random_interior(rng, Dp)
    m1 = apollonius_family(D, Dp, fp).abs_m
    T = MoebiusMap(1, 0.3 + 0.2j, 0.1j, 1)
    m2 = apollonius_family(map_disk(T, D), map_disk(T, Dp), apply(T, fp)).abs_m
    assert abs(m1 - m2) <= 1e-10 * m1
