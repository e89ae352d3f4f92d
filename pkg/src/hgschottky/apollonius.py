"""Concentric centers of two disks and the loxodromic maps pairing them.

For disjoint disks ``D``, ``D'`` there is one point ``F`` in ``D`` and one
point ``F'`` in ``D'`` such that sending either to infinity makes the two
boundary circles concentric.  For an interior point ``f'`` of ``D'`` the
loxodromic maps fixing ``f'`` and carrying ``D`` onto the complement of
``D'`` all share ``|m|`` and have their other fixed point on a circle ``A``
inside ``D`` (the Apollonius circle); when ``f' = F'`` that circle collapses
to ``F`` and is replaced by the circle of phases ``arg m``.
"""

from dataclasses import dataclass, field

from ._prec import ctx, mpc, mpf
from .disk import (
    GeneralizedDisk, complement, disjoint, from_center_radius, map_disk, radial_offset,
)
from .sphere import INF, MoebiusMap, SpherePoint, from_fixed_points_multiplier, inverse

DEGENERATE_TOL = 1e-8
ON_CIRCLE_TOL = 1e-9


class DisksNotDisjoint(ValueError):
    pass


class NumericalRootOutsideInterval(ArithmeticError):
    pass


class PointNotInterior(ValueError):
    pass


class PhaseRequired(ValueError):
    pass


class PointNotOnA(ValueError):
    pass


def _to_infinity(p):
    """``z -> 1/(z - p)``."""
    return MoebiusMap(0, 1, 1, -mpc(p))


def _candidate_points(X):
    """Interior points of ``X`` spread over the disk."""
    pts = []
    if X.A > 0:
        c, rho = X.center, X.radius
        pts.append(c)
        for k in (0.5, 0.9):
            for j in range(8):
                pts.append(c + k * rho * ctx.expjpi(mpf(j) / 4))
    elif X.A < 0:
        c, rho = X.center, X.radius
        for k in (1.1, 2, 4):
            for j in range(8):
                pts.append(c + k * rho * ctx.expjpi(mpf(j) / 4))
    else:
        foot = -X.D * X.B / (2 * abs(X.B) ** 2)
        n = -X.B / abs(X.B)  # inward normal
        t = 1j * n
        for k in (0.5, 1, 4):
            for l in (-4, -1, 0, 1, 4):
                pts.append(foot + k * n + l * t)
    return pts


def general_position(D, Dp):
    """A Moebius map taking both disks to bounded disks.

    The identity when neither disk meets infinity; otherwise ``z -> 1/(z - p)``
    for the candidate point ``p`` outside both disks that is farthest (in
    relative radial offset) from either boundary.
    """
    if D.A > 0 and Dp.A > 0:
        return MoebiusMap.identity()
    if not disjoint(D, Dp)[0]:
        raise DisksNotDisjoint("disks meet")
    X, Y = (D, Dp) if D.A <= 0 else (Dp, D)
    best, best_score = None, None
    for z in _candidate_points(complement(X)):
        score = min(radial_offset(X, z), radial_offset(Y, z))
        if best_score is None or score > best_score:
            best, best_score = z, score
    if best is None or not best_score > 0:
        raise DisksNotDisjoint("no point outside both disks found")
    return _to_infinity(best)


@dataclass(frozen=True, eq=False)
class ConcentricPair:
    F: SpherePoint
    Fp: SpherePoint
    D: GeneralizedDisk
    Dp: GeneralizedDisk
    # quadratic data in the bounded frame, kept for auditing the root intervals
    eta: float = None
    eta_p: float = None
    interval: tuple = None
    interval_p: tuple = None


def solve_eta(d, r, rp):
    """Roots of ``eta^2 + (-1 + (r^2 - r'^2)/d^2) eta + r'^2/d^2 = 0``.

    Returns ``(eta_F, eta_F')`` with ``eta_F`` in ``(1 - r/d, 1)`` and
    ``eta_F'`` in ``(0, r'/d)``; the quadratic has real coefficients and the
    roots are interval-separated, so the non-cancelling quadratic formula is
    used and each root checked against its interval.
    """
    d, r, rp = mpf(d), mpf(r), mpf(rp)
    bq = -1 + (r * r - rp * rp) / (d * d)
    cq = rp * rp / (d * d)
    disc = bq * bq - 4 * cq
    if disc <= 0:
        raise NumericalRootOutsideInterval("discriminant is not positive; disks are not disjoint")
    sq = ctx.sqrt(disc)
    q = -(bq - sq) / 2 if bq < 0 else -(bq + sq) / 2
    roots = sorted([q, cq / q])
    eta_p, eta = roots
    lo, hi = 1 - r / d, mpf(1)
    lo_p, hi_p = mpf(0), rp / d
    if not (lo < eta < hi):
        raise NumericalRootOutsideInterval(f"eta = {eta} not in ({lo}, {hi})")
    if not (lo_p < eta_p < hi_p):
        raise NumericalRootOutsideInterval(f"eta' = {eta_p} not in ({lo_p}, {hi_p})")
    return eta, eta_p, (lo, hi), (lo_p, hi_p)


def concentric_centers(D, Dp):
    """The points ``F`` in ``D`` and ``F'`` in ``D'`` of the concentric normalization."""
    if not disjoint(D, Dp)[0]:
        raise DisksNotDisjoint("disks meet")
    T = general_position(D, Dp)
    E, Ep = map_disk(T, D), map_disk(T, Dp)
    a, r = E.center, E.radius
    ap, rp = Ep.center, Ep.radius
    d = abs(a - ap)
    eta, eta_p, iv, iv_p = solve_eta(d, r, rp)
    # zeta = (a - a') eta + a'
    Ti = inverse(T)
    F = Ti((a - ap) * eta + ap)
    Fp = Ti((a - ap) * eta_p + ap)
    return ConcentricPair(F, Fp, D, Dp, float(eta), float(eta_p),
                          tuple(map(float, iv)), tuple(map(float, iv_p)))


def to_infinity_map(p):
    """A Moebius map sending ``p`` to infinity (identity if ``p`` is already there)."""
    p = SpherePoint.of(p)
    if p.is_infinity:
        return MoebiusMap.identity()
    return _to_infinity(p.value)


def concentricity(D, Dp, F):
    """Center offset over the smaller radius after sending ``F`` to infinity."""
    T = to_infinity_map(F)
    E, Ep = map_disk(T, D), map_disk(T, Dp)
    return float(abs(E.center - Ep.center) / min(E.radius, Ep.radius))


@dataclass(frozen=True, eq=False)
class ApolloniusData:
    """Pairing-family data for ``(D, D', f')``.

    In the frame ``S`` (``S(f') = inf``) ``D`` becomes the disk ``(c, r)``
    and the complement of ``D'`` the disk ``(c', r')``; ``abs_m = r'/r``.
    ``circle`` is the Apollonius circle ``|f - c'| = |m| |f - c|`` pulled back
    to the original coordinates, or ``None`` in the degenerate case.
    """

    D: GeneralizedDisk
    Dp: GeneralizedDisk
    fp: SpherePoint
    abs_m: object
    circle: GeneralizedDisk = None
    degenerate: bool = False
    frame: MoebiusMap = field(default=None, repr=False)
    c: object = None
    cp: object = None


def apollonius_family(D, Dp, fp, degenerate_tol=DEGENERATE_TOL):
    if not disjoint(D, Dp)[0]:
        raise DisksNotDisjoint("disks meet")
    fp = SpherePoint.of(fp)
    if radial_offset(Dp, fp) >= 0:
        raise PointNotInterior(f"{fp!r} is not interior to D'")
    S = to_infinity_map(fp)
    E = map_disk(S, D)
    Ec = map_disk(S, complement(Dp))
    c, r = E.center, E.radius
    cp, rp = Ec.center, Ec.radius
    abs_m = rp / r
    Fp = concentric_centers(D, Dp).Fp
    if Fp.chordal(fp) < degenerate_tol:
        return ApolloniusData(D, Dp, fp, abs_m, None, True, S, c, cp)
    # |f - c'| = k |f - c| with k = |m| > 1: center and radius of the Apollonius circle
    k2 = abs_m ** 2
    center = (k2 * c - cp) / (k2 - 1)
    radius = abs_m * abs(c - cp) / (k2 - 1)
    A = map_disk(inverse(S), from_center_radius(center, radius))
    return ApolloniusData(D, Dp, fp, abs_m, A, False, S, c, cp)


def point_on_circle(data, phase):
    """The fixed point ``f`` in ``D`` selected by ``arg m = phase``."""
    m = data.abs_m * ctx.expj(mpf(phase))
    if data.degenerate:
        return inverse(data.frame)(data.c)
    f = (data.cp - m * data.c) / (1 - m)
    return inverse(data.frame)(f)


def pairing_map(data, phase=None, point=None, tol=ON_CIRCLE_TOL):
    """The loxodromic map of the family given by a phase or by its fixed point on ``A``.

    In the frame ``S`` the map is ``z -> m (z - f) + f`` with ``c' - f = m (c - f)``.
    """
    if (phase is None) == (point is None):
        raise ValueError("give exactly one of phase, point")
    S = data.frame
    if point is not None:
        if data.degenerate:
            raise PhaseRequired("the Apollonius circle is blown up; give a phase")
        w = S(SpherePoint.of(point))
        if w.is_infinity:
            raise PointNotOnA("point maps to infinity")
        f = w.value
        dist = abs(abs(f - data.cp) - data.abs_m * abs(f - data.c))
        if dist > tol * max(1, abs(data.cp - data.c)):
            raise PointNotOnA(f"point is {float(dist):.3g} off the Apollonius circle")
        m = (data.cp - f) / (data.c - f)
    else:
        m = data.abs_m * ctx.expj(mpf(phase))
        f = data.c if data.degenerate else (data.cp - m * data.c) / (1 - m)
    Si = inverse(S)
    return from_fixed_points_multiplier(Si(f), Si(INF), m)
