import random

import pytest

from hgschottky.apollonius import apollonius_family, pairing_map
from hgschottky.disk import contained, contains, disjoint, from_center_radius, map_disk
from hgschottky.loops import base_point
from hgschottky.schottky import (
    DepthTooLarge, NonLoxodromicGenerator, SchottkyConfig, certify, check_nesting, orbit_sample,
    reduced_words, separating_circle_check,
)
from hgschottky.sphere import MoebiusMap, inverse, translation


@pytest.fixture(scope="module")
def base():
    return base_point(0.2, 6, 5)


def _pair(D, Dp, phase=0.3):
    return pairing_map(apollonius_family(D, Dp, Dp.center), phase=phase)


@pytest.fixture(scope="module")
def square():
    D1, D1p, D2, D2p = (from_center_radius(c, 1) for c in (-5 - 5j, 5 + 5j, 5 - 5j, -5 + 5j))
    return SchottkyConfig(_pair(D1, D1p), _pair(D2, D2p), D1, D1p, D2, D2p)


def test_base_point_certifies(base):
    cert = certify(base)
    assert cert.verdict and cert.passes(1e-6)
    assert all(cert.disjoint.values()) and all(cert.orientation.values())
    assert all(v <= cert.tol for v in cert.circle_residuals.values())
    d = cert.to_dict()
    assert d["verdict"] and d["min_margin"] == cert.min_margin


def test_inflated_disk_fails(base):
    D1 = base.D1
    grown = from_center_radius(D1.center, 1.5)  # D_0 grown past D_1 at z = 1
    bad = SchottkyConfig(base.gamma1, base.gamma2, grown, base.D1p, base.D2, base.D2p)
    cert = certify(bad)
    assert not cert.verdict
    assert not cert.disjoint["D1|D2"]
    assert any(f.startswith("disjoint D1|D2") for f in cert.failures)


def test_inverted_generator_fails(base):
    bad = SchottkyConfig(base.gamma1, inverse(base.gamma2), base.D1, base.D1p, base.D2, base.D2p,
                         base.f1, base.f1p, base.f2, base.f2p)
    cert = certify(bad)
    assert not cert.verdict
    assert any(f.startswith(("circle match gamma2", "orientation gamma2")) for f in cert.failures)


def test_non_loxodromic_rejected(base):
    bad = SchottkyConfig(translation(1), base.gamma2, base.D1, base.D1p, base.D2, base.D2p)
    with pytest.raises(NonLoxodromicGenerator):
        certify(bad)


def test_square_configuration(square):
    assert certify(square).verdict
    found, C, partition = separating_circle_check(square)
    assert found
    assert partition == (("D1", "D2"), ("D1p", "D2p"))
    # nearly the horizontal axis
    for name in ("D1", "D2"):
        assert disjoint(square.disks[name], C)[0]
    for name in ("D1p", "D2p"):
        assert contained(square.disks[name], C)[0]


def test_base_point_separator(base):
    found, C, _ = separating_circle_check(base)
    assert found and C is not None


def test_reduced_word_counts():
    assert reduced_words(0) == [""]
    assert reduced_words(1) == ["a", "A", "b", "B"]
    for d in range(1, 7):
        words = reduced_words(d)
        assert len(words) == 4 * 3 ** (d - 1)
        assert len(set(words)) == len(words)
        for w in words:
            assert all({x, y} not in ({"a", "A"}, {"b", "B"}) for x, y in zip(w, w[1:]))


def test_orbit_depth_zero_and_one(square):
    pts = orbit_sample(square, 0)
    assert len(pts) == 4
    for p, X in zip(pts, square.disks.values()):
        assert contains(X, p) == "inside"
    pts1 = orbit_sample(square, 1)[4:]
    assert len(pts1) <= 16
    for p in pts1:
        assert sum(contains(X, p) == "inside" for X in square.disks.values()) == 1


def test_depth_limit(square):
    with pytest.raises(DepthTooLarge):
        orbit_sample(square, 13)


def test_nesting_square(square):
    rep = check_nesting(square, 4)
    assert rep.ok and rep.min_margin > 0
    assert rep.word_counts[4] == 108


def test_gamma1_sends_other_disks_into_target(base):
    for name in ("D1p", "D2", "D2p"):
        image = map_disk(base.gamma1, base.disks[name])
        assert contained(image, base.D1p)[0]


def test_conjugation_invariance(square):
    rng = random.Random(21)
    for _ in range(10):
        T = MoebiusMap(*(complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(4)))
        moved = square.transported(T)
        cert = certify(moved)
        assert cert.verdict
        assert max(cert.circle_residuals.values()) <= 10 * cert.tol
