import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from hgschottky.disk import (
    NonpositiveRadius, circle_residual, complement, contained, contains, disjoint,
    from_center_radius, half_plane, inversive_product, map_disk, outside, same_circle,
)
from hgschottky.sphere import INF, MoebiusMap, apply, compose, scaling
from hgschottky.special import normalize_generators, HGParams

cplx = st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False)
maps = st.tuples(cplx, cplx, cplx, cplx).filter(
    lambda m: abs(m[0] * m[3] - m[1] * m[2]) > 0.1).map(lambda m: MoebiusMap(*m))
disks = st.tuples(cplx, st.floats(0.05, 2)).map(lambda cr: from_center_radius(*cr))


def test_center_radius_recovered():
    X = from_center_radius(1 - 2j, 0.3)
    assert abs(X.center - (1 - 2j)) < 1e-12 and abs(X.radius - 0.3) < 1e-12
    assert max(abs(X.A), abs(X.B), abs(X.D)) == 1


def test_unit_disk_membership():
    U = from_center_radius(0, 1)
    assert contains(U, 0) == "inside"
    assert contains(U, 2) == "outside"
    assert contains(U, 1j) == "boundary"


def test_nonpositive_radius():
    with pytest.raises(NonpositiveRadius):
        from_center_radius(0, 0)


def test_complement():
    U = from_center_radius(0, 1)
    C = complement(U)
    assert contains(C, INF) == "inside" and contains(C, 0) == "outside"
    assert same_circle(U, C)
    X = complement(complement(U))
    assert (X.A, X.B, X.D) == (U.A, U.B, U.D)


def test_outside_is_complement_of_disk():
    eps, r = 0.5, 0.7
    Dinf = outside(0, r / eps)
    assert contains(Dinf, INF) == "inside"
    assert contains(Dinf, 0) == "outside"


def test_transport_examples():
    X = from_center_radius(1 + 1j, 0.5)
    Y = map_disk(scaling(2j), X)
    assert abs(Y.center - 2j * (1 + 1j)) < 1e-12 and abs(Y.radius - 1) < 1e-12
    Z = map_disk(MoebiusMap(0, 1, 1, 0), from_center_radius(0, 0.5))
    assert Z.contains_infinity and abs(Z.radius - 2) < 1e-12
    assert same_circle(map_disk(MoebiusMap.identity(), X), X)


def test_disjoint_examples():
    U = from_center_radius(0, 1)
    ok, m = disjoint(U, from_center_radius(3, 1))
    assert ok and m > 0
    ok, m = disjoint(U, from_center_radius(2, 1))
    assert not ok
    # nested disks are not disjoint, and neither are a disk and a disk covering it
    assert not disjoint(U, from_center_radius(0, 3))[0]
    assert not disjoint(complement(from_center_radius(0, 0.5)), U)[0]


def test_disjoint_in_multiplier_loop_geometry():
    theta0, theta1 = 0.3, 4.0
    eps = math.exp(-math.pi * theta0)
    r = (1 / eps - eps) / (math.exp(math.pi * (theta0 + 2 * theta1)) - 1)
    assert eps > eps ** 2 * (1 + r) + r
    assert disjoint(from_center_radius(0, eps ** 2 * (1 + r)), from_center_radius(eps, r))[0]


def test_same_circle_examples():
    X = from_center_radius(0.3, 1e-3)
    assert not same_circle(X, from_center_radius(0.3 + 2e-9, 1e-3))
    # gamma1 maps D_0 onto the complement of D_inf for the first loop
    p = HGParams.from_thetas(0.2, 6, 5)
    g1, _ = normalize_generators(p)
    eps = math.exp(-math.pi * 0.2)
    r = eps * (math.exp(2 * math.pi) + 1 / eps) / (math.exp(2 * math.pi) + eps)
    D0, Dinf = from_center_radius(0, eps * r), outside(0, r / eps)
    assert circle_residual(map_disk(g1, D0), complement(Dinf)) <= 1e-9


def test_half_plane():
    H = half_plane(0, 1)  # Re z <= 0
    assert contains(H, -1) == "inside" and contains(H, 1) == "outside"
    assert contains(H, INF) == "boundary"
    assert disjoint(H, from_center_radius(2, 1))[0]


@settings(max_examples=50)
@given(maps, maps, disks)
def test_transport_is_group_action(M1, M2, X):
    A = map_disk(compose(M1, M2), X)
    B = map_disk(M1, map_disk(M2, X))
    assert circle_residual(A, B) < 1e-10
    assert (A.A > 0) == (B.A > 0)


@settings(max_examples=50)
@given(maps, disks)
def test_transport_commutes_with_complement(M, X):
    A = map_disk(M, complement(X))
    B = complement(map_disk(M, X))
    assert circle_residual(A, B) < 1e-10
    assert (A.A > 0) == (B.A > 0)


def test_membership_preserved():
    rng = random.Random(7)
    checked = 0
    while checked < 100:
        M = MoebiusMap(*(complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(4)))
        X = from_center_radius(complex(rng.gauss(0, 1), rng.gauss(0, 1)), rng.uniform(0.1, 2))
        z = complex(rng.gauss(0, 2), rng.gauss(0, 2))
        a = contains(X, z)
        if a == "boundary":
            continue
        assert contains(map_disk(M, X), apply(M, z), tol=1e-9) == a
        checked += 1


@settings(max_examples=50)
@given(maps, disks, disks)
def test_disjoint_symmetric_and_invariant(M, X, Y):
    a, m1 = disjoint(X, Y)
    b, m2 = disjoint(Y, X)
    assert a == b and abs(m1 - m2) < 1e-12
    c, m3 = disjoint(map_disk(M, X), map_disk(M, Y))
    if abs(m1) > 1e-6:
        assert a == c
        assert abs(m1 - m3) < 1e-8


def test_contained():
    assert contained(from_center_radius(0, 0.5), from_center_radius(0.1, 1))[0]
    assert not contained(from_center_radius(0, 0.5), from_center_radius(2, 1))[0]


def test_inversive_product_tangent():
    assert abs(inversive_product(from_center_radius(0, 1), from_center_radius(2, 1)) - 1) < 1e-12
