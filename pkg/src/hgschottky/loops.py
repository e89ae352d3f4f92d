"""The four deformation loops of genus-2 Schottky monodromy groups.

Each loop moves the parameters of E(a, b, c) by a continuous integer shift
of one real part, so the monodromy group at ``t = 1`` is the one at
``t = 0``.  Along the way every sample is turned into a Schottky
configuration in the normalized coordinate (fixed points ``0, inf`` of
gamma1 and ``1, alpha`` of gamma2) and certified.

Disk slots are ``D1 = D_0``, ``D1p = D_inf``, ``D2 = D_1``, ``D2p = D_alpha``;
gamma1 maps ``D_0`` onto the complement of ``D_inf`` and gamma2 maps ``D_1``
onto the complement of ``D_alpha``.  ``D_0`` and ``D_inf`` follow explicit
radius recipes; ``D_1`` and ``D_alpha`` are the isometric disks of the
normalized gamma2 or a pair ``disk(1, rho)``, complement of ``gamma2(disk(1, rho))`` with ``rho``
chosen to maximize the separation.

The multiplier tracked for a generator is its multiplier at the fixed point
in its target disk (``inf`` for gamma1, ``alpha`` for gamma2), i.e.
``exp(2 pi i lam)`` and ``exp(2 pi i mu)``.

Orientation: with ``phi`` increasing from 0 to 1 the value
``g(1/2 + phi - (i/2)(th0 + psi))`` runs clockwise, so the first loop is
parametrized by ``R exp(-2 pi i t)`` and alpha winds ``-1`` times around 0.
"""

import cmath
import functools
import math
from dataclasses import dataclass, field, replace
from enum import Enum

from ._prec import DEFAULT_TOL, ctx, mpc, mpf
from .disk import (
    GeneralizedDisk, circle_residual, complement, contains, disjoint, from_center_radius, map_disk, outside,
)
from .schottky import DEFAULT_MARGIN, SchottkyConfig, certify
from .special import HGParams, g_function, g_function_mp, normalize_generators, normalized_alpha
from .sphere import INF, MoebiusMap, SpherePoint, conjugate, same_map

TWO_PI = 2 * math.pi


class LoopKind(str, Enum):
    ALPHA_AROUND_D0 = "alpha-around-d0"
    ALPHA_AROUND_D1 = "alpha-around-d1"
    MULTIPLIER_GAMMA2 = "multiplier-gamma2"
    MULTIPLIER_GAMMA1 = "multiplier-gamma1"


class BranchJump(ArithmeticError):
    pass


class ProfileNotAudited(ValueError):
    def __init__(self, audit):
        self.audit = audit
        bad = ", ".join(c.name for c in audit.checks if not c.ok)
        super().__init__(f"profile audit failed: {bad}")


class DiskConstructionFailed(ValueError):
    pass


@dataclass(frozen=True)
class LoopProfile:
    """Angles and tracing settings for one loop.

    ``theta2`` is used by the multiplier loops (which need ``theta1 == theta2``
    for gamma2, ``theta0 == theta2`` for gamma1); ``theta_prime`` and ``s``
    belong to the loop around ``D_1`` (``s`` defaults to 0.9 of its bound).
    """

    kind: LoopKind
    theta0: float
    theta1: float
    theta2: float = None
    theta_prime: float = None
    s: float = None
    n: int = 64
    tol: float = DEFAULT_TOL
    margin: float = DEFAULT_MARGIN
    outer: str = "balanced"

    def __post_init__(self):
        object.__setattr__(self, "kind", LoopKind(self.kind))
        if self.outer not in ("balanced", "tight"):
            raise ValueError("outer must be 'balanced' or 'tight'")

    @property
    def epsilon(self):
        return math.exp(-math.pi * self.theta0)

    def dual(self):
        """The multiplier-gamma2 profile whose ``x -> 1 - x`` image this gamma1 profile is."""
        if self.kind is not LoopKind.MULTIPLIER_GAMMA1:
            raise ValueError("only the gamma1 multiplier loop has a dual")
        return replace(self, kind=LoopKind.MULTIPLIER_GAMMA2, theta0=self.theta1, theta1=self.theta0)


def s_bound(theta0, theta_prime):
    """Upper bound for ``s``: ``min{r, (1 - eps r)/r, (r/eps - eps R)/(1/eps + R)}``."""
    eps = math.exp(-math.pi * theta0)
    k = math.exp(math.pi * theta_prime)
    r = eps + (1 / eps - eps) / (1 + k)
    R = eps + (1 / eps - eps) / (1 - k)
    return min(r, (1 - eps * r) / r, (r / eps - eps * R) / (1 / eps + R))


def theta1_for_s(theta0, s):
    """Smallest ``theta1`` with ``eps + (1/eps - eps)/(1 + e^{pi(th0+th1)}) < eps + s``."""
    eps = math.exp(-math.pi * theta0)
    x = (1 / eps - eps) / s - 1
    if x <= 1:
        return 0.0
    return max(0.0, math.log(x) / math.pi - theta0)


def default_profile(kind):
    """Shipped profiles; chosen to satisfy every audited inequality."""
    kind = LoopKind(kind)
    if kind is LoopKind.ALPHA_AROUND_D0:
        return LoopProfile(kind, theta0=0.2, theta1=6.0)
    if kind is LoopKind.ALPHA_AROUND_D1:
        theta0, theta_prime = 0.2, -0.5
        s = 0.9 * s_bound(theta0, theta_prime)
        theta1 = theta1_for_s(theta0, s) + 1.0
        return LoopProfile(kind, theta0=theta0, theta1=theta1, theta_prime=theta_prime, s=s)
    if kind is LoopKind.MULTIPLIER_GAMMA2:
        return LoopProfile(kind, theta0=0.3, theta1=4.0, theta2=4.0)
    return LoopProfile(kind, theta0=4.0, theta1=0.3, theta2=4.0)


def profile_constants(profile):
    """Derived ``eps, r, R, s, theta2`` (whichever the kind uses)."""
    k = profile.kind
    eps = profile.epsilon
    out = {"eps": eps}
    if k is LoopKind.ALPHA_AROUND_D0:
        out["r"] = eps * (math.exp(TWO_PI) + 1 / eps) / (math.exp(TWO_PI) + eps)
        out["R"] = eps * (math.exp(math.pi) + 1 / eps) / (math.exp(math.pi) + eps)
    elif k is LoopKind.ALPHA_AROUND_D1:
        e = math.exp(math.pi * profile.theta_prime)
        out["r"] = eps + (1 / eps - eps) / (1 + e)
        out["R"] = eps + (1 / eps - eps) / (1 - e)
        out["s_bound"] = s_bound(profile.theta0, profile.theta_prime)
        out["s"] = profile.s if profile.s is not None else 0.9 * out["s_bound"]
        out["theta2"] = profile.theta0 + profile.theta1 - profile.theta_prime
    elif k is LoopKind.MULTIPLIER_GAMMA2:
        theta = profile.theta0 + profile.theta1 + profile.theta2
        out["theta"] = theta
        out["r"] = (1 / eps - eps) / (math.exp(math.pi * theta) - 1)
    else:
        out.update(profile_constants(profile.dual()))
        out["eps"] = eps
    return out


# phi / psi -----------------------------------------------------------------------


def _phi_psi_E(profile, t):
    c = profile_constants(profile)
    eps, R = c["eps"], c["R"]
    w = R * cmath.exp(-2j * math.pi * t)
    return (w - 1 / eps) / (w - eps)


def _principal(x):
    return (x + math.pi) % TWO_PI - math.pi


def solve_phi_psi(profile, t, step=1 / 64, max_depth=30):
    """``(phi, psi)`` with ``g(1/2 + phi - (i/2)(th0 + psi)) = R exp(-2 pi i t)``.

    ``E = (w - 1/eps)/(w - eps)`` equals ``exp(2 pi i x)`` for that ``x``;
    ``psi`` comes from ``|E|`` and ``phi`` from ``arg E`` continued from
    ``arg E(0) = pi`` in steps whose increments stay below ``pi/2``.
    """
    E0 = _phi_psi_E(profile, 0.0)
    arg = cmath.phase(E0)
    if abs(abs(arg) - math.pi) > 1e-9:
        raise BranchJump("E(0) is not a negative real; profile is invalid")
    arg = math.pi

    def advance(t0, arg0, t1, depth):
        d = _principal(cmath.phase(_phi_psi_E(profile, t1)) - arg0)
        if abs(d) < math.pi / 2:
            return arg0 + d
        if depth == 0:
            raise BranchJump(f"continuation failed near t = {t1}")
        tm = 0.5 * (t0 + t1)
        am = advance(t0, arg0, tm, depth - 1)
        return advance(tm, am, t1, depth - 1)

    nsteps = max(1, math.ceil(abs(t) / step))
    t_prev = 0.0
    for i in range(1, nsteps + 1):
        t_next = t * i / nsteps
        arg = advance(t_prev, arg, t_next, max_depth)
        t_prev = t_next
    # final value in working precision, on the branch found above
    c = profile_constants(profile)
    eps, R = mpf(c["eps"]), mpf(c["R"])
    w = R * ctx.expjpi(-2 * mpf(t))
    E = (w - 1 / eps) / (w - eps)
    turns = round((arg - float(ctx.arg(E))) / TWO_PI)
    phi = (ctx.arg(E) + turns * 2 * ctx.pi) / (2 * ctx.pi) - mpf(1) / 2
    psi = ctx.log(abs(E)) / ctx.pi - profile.theta0
    return float(phi), float(psi)


@dataclass
class PhiPsi:
    t: list
    phi: list
    psi: list

    def check(self, tol=1e-8):
        return {
            "phi(0)=0": abs(self.phi[0]) <= tol,
            "phi(1)=1": abs(self.phi[-1] - 1) <= tol,
            "psi(0)=1": abs(self.psi[0] - 1) <= tol,
            "psi(1)=1": abs(self.psi[-1] - 1) <= tol,
            "phi monotone": all(b > a for a, b in zip(self.phi, self.phi[1:])),
        }


def phi_psi_grid(profile, n):
    ts = [i / n for i in range(n + 1)]
    vals = [solve_phi_psi(profile, t) for t in ts]
    return PhiPsi(ts, [v[0] for v in vals], [v[1] for v in vals])


# audit -------------------------------------------------------------------------------


@dataclass
class AuditCheck:
    name: str
    lhs: float
    rhs: float

    @property
    def slack(self):
        return self.rhs - self.lhs

    @property
    def ok(self):
        return self.slack > 0

    def to_dict(self):
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs, "slack": self.slack, "ok": self.ok}


@dataclass
class AuditReport:
    kind: LoopKind
    checks: list

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failed(self):
        return [c.name for c in self.checks if not c.ok]

    def to_dict(self):
        return {"kind": self.kind.value, "ok": self.ok, "checks": [c.to_dict() for c in self.checks]}


def _lt(name, lhs, rhs):
    return AuditCheck(name, float(lhs), float(rhs))


def _audit_gamma2_multiplier(p, prefix=""):
    c = profile_constants(p)
    eps, r = c["eps"], c["r"]
    return [
        _lt(prefix + "theta0 > 0", 0, p.theta0),
        _lt(prefix + "theta1 == theta2", abs(p.theta1 - p.theta2), 1e-12),
        _lt(prefix + "r < 1 - eps", r, 1 - eps),
        _lt(prefix + "r < 1/(1 + 1/eps)", r, 1 / (1 + 1 / eps)),
        _lt(prefix + "eps^2 (1 + r) < eps - r", eps ** 2 * (1 + r), eps - r),
        _lt(prefix + "eps + r < 1", eps + r, 1),
    ]


def audit_profile(kind, profile=None):
    """Evaluate every inequality the loop construction relies on, with slack."""
    kind = LoopKind(kind)
    profile = profile or default_profile(kind)
    return _audit_cached(replace(profile, kind=kind))


@functools.lru_cache(maxsize=64)
def _audit_cached(p):
    kind = p.kind
    checks = []
    c = profile_constants(p)
    eps = c["eps"]
    if kind is LoopKind.ALPHA_AROUND_D0:
        r, R = c["r"], c["R"]
        r_def = g_function(0.5 - 0.5j * (p.theta0 + 2), 1 - 1j * p.theta0)
        R_def = g_function(0.5 - 0.5j * (p.theta0 + 1), 1 - 1j * p.theta0)
        checks += [
            _lt("0 < eps", 0, eps),
            _lt("eps < r", eps, r),
            _lt("r < R", r, R),
            _lt("R < 1", R, 1),
            _lt("r matches g(1/2 - (i/2)(th0 + 2))", abs(r_def - r), 1e-12),
            _lt("R matches g(1/2 - (i/2)(th0 + 1))", abs(R_def - R), 1e-12),
            _lt("eps r < eps R", eps * r, eps * R),
            _lt("1 < r / eps", 1, r / eps),
        ]
        try:
            grid = phi_psi_grid(p, max(p.n, 64))
            checks.append(_lt("theta1 > max psi", max(grid.psi), p.theta1))
        except BranchJump:
            checks.append(AuditCheck("phi/psi continuation", 1.0, 0.0))
    elif kind is LoopKind.ALPHA_AROUND_D1:
        r, R, s, sb = c["r"], c["R"], c["s"], c["s_bound"]
        e = math.exp(math.pi * p.theta_prime)
        checks += [
            _lt("theta0 > 0", 0, p.theta0),
            _lt("(1) needs theta' < 0", p.theta_prime, 0),
            _lt("(1) e^{pi th'}(1 + e^{pi th'})/(1 - e^{pi th'}) < eps^-2", e * (1 + e) / (1 - e), eps ** -2),
            _lt("0 < s", 0, s),
            _lt("s < min bound", s, sb),
            _lt("(2a) (eps + s) r < 1", (eps + s) * r, 1),
            _lt("(2b) (eps + s) R < (r - s)/eps", (eps + s) * R, (r - s) / eps),
            _lt("(3) eps + (1/eps - eps)/(1 + e^{pi(th0 + th1)}) < eps + s",
                eps + (1 / eps - eps) / (1 + math.exp(math.pi * (p.theta0 + p.theta1))), eps + s),
            _lt("theta2 > 0", 0, c["theta2"]),
            _lt("1 < eps R", 1, eps * R),
        ]
    elif kind is LoopKind.MULTIPLIER_GAMMA2:
        checks += _audit_gamma2_multiplier(p)
    else:
        checks.append(_lt("theta0 == theta2", abs(p.theta0 - p.theta2), 1e-12))
        checks += _audit_gamma2_multiplier(p.dual(), prefix="dual: ")
    return AuditReport(kind, checks)


def _require_audit(kind, profile):
    audit = audit_profile(kind, profile)
    if not audit.ok:
        raise ProfileNotAudited(audit)
    return audit


# parameters and disks ---------------------------------------------------------------------


def loop_params(kind, profile, t):
    """Parameters ``(a, b, c)`` at time ``t`` of the loop."""
    kind = LoopKind(kind)
    profile = replace(profile, kind=kind)
    _require_audit(kind, profile)
    th0, th1 = profile.theta0, profile.theta1
    if kind is LoopKind.ALPHA_AROUND_D0:
        phi, psi = solve_phi_psi(profile, t)
        th2 = th1 - psi
        a = 0.5 - 0.5j * (th0 + th1 + th2)
        b = 0.5 + phi - 0.5j * (th0 + th1 - th2)
        return HGParams(a, b, 1 - 1j * th0)
    if kind is LoopKind.ALPHA_AROUND_D1:
        th2 = profile_constants(profile)["theta2"]
        a = 0.5 - 0.5j * (th0 + th1 + th2)
        b = 0.5 + t - 0.5j * profile.theta_prime
        return HGParams(a, b, 1 - 1j * th0)
    if kind is LoopKind.MULTIPLIER_GAMMA2:
        theta = th0 + th1 + profile.theta2
        return HGParams(0.5 + t - 0.5j * theta, 0.5 - 0.5j * th0, 1 - 1j * th0)
    return loop_params(LoopKind.MULTIPLIER_GAMMA2, profile.dual(), t).swapped()


def isometric_disks(M):
    """``(I(M), I(M^-1))`` as closed disks; ``M`` maps the first onto the complement of the second."""
    p, r, s = M.p, M.r, M.s
    if r == 0:
        raise DiskConstructionFailed("isometric circles need r != 0 (map fixes infinity)")
    ar2 = abs(r) ** 2
    src = GeneralizedDisk(ar2, ctx.conj(r) * s, abs(s) ** 2 - 1)
    dst = GeneralizedDisk(ar2, -ctx.conj(r) * p, abs(p) ** 2 - 1)
    return src, dst


def _outer_disks(kind, profile):
    c = profile_constants(profile)
    eps, r = c["eps"], c["r"]
    if kind is LoopKind.ALPHA_AROUND_D0:
        return from_center_radius(0, eps * r), outside(0, r / eps)
    if kind is LoopKind.ALPHA_AROUND_D1:
        s = c["s"]
        return from_center_radius(0, eps * (r - s)), outside(0, (r - s) / eps)
    rho = 1 + r if profile.outer == "tight" else eps ** -0.5
    return from_center_radius(0, eps ** 2 * rho), outside(0, rho)


def outer_obstruction(profile, t=0.0):
    """Inversive margin between ``gamma2^-1(D_0)`` and ``D_inf`` for the multiplier-gamma2 loop.

    ``D_1`` must contain ``gamma2^-1(D_0)`` and miss ``D_inf``, so a
    non-positive value rules out every pair ``D_1, D_alpha``.  With the
    outer radius ``1 + r`` the point 1 lies ``r`` away from ``D_inf`` while
    ``r`` and the multiplier shrink together, and the value stays negative
    however large ``theta1`` is taken.
    """
    profile = replace(profile, kind=LoopKind.MULTIPLIER_GAMMA2)
    params = loop_params(profile.kind, profile, t)
    _, g2 = normalize_generators(params)
    D0, Dinf = _outer_disks(profile.kind, profile)
    return disjoint(map_disk(g2.inverse(), D0), Dinf, 0)[1]


def _pair_margin(D1, Da, D0, Dinf):
    return min(disjoint(X, Y, 0)[1] for X, Y in (
        (D1, D0), (D1, Dinf), (Da, D0), (Da, Dinf), (D1, Da)))


def _centred_pair(g2, rho):
    D1 = from_center_radius(1, rho)
    return D1, complement(map_disk(g2, D1))


def _gamma2_disks(g2, alpha, D0, Dinf, profile, grid=48, iters=40):
    """Disks ``D_1`` (around 1) and ``D_alpha`` paired by ``g2``, away from ``D_0, D_inf``.

    Candidates are the isometric disks of ``g2`` and the pairs
    ``D_1 = disk(1, rho)``, ``D_alpha`` the complement of ``g2(D_1)``; ``rho``
    is searched on a log grid and refined by golden section, keeping the
    pair with the largest smallest inversive distance.
    """
    best, best_margin = None, -ctx.inf
    try:
        iso = isometric_disks(g2)
        if contains(iso[0], 1) == "inside" and contains(iso[1], alpha) == "inside":
            best, best_margin = iso, _pair_margin(*iso, D0, Dinf)
    except DiskConstructionFailed:
        pass
    k = abs(g2.multiplier_at(SpherePoint.of(alpha)))
    rho_max = min(abs(1 - mpc(alpha)), abs(1 - D0.center) - D0.radius, Dinf.radius - abs(1 - Dinf.center))
    if rho_max > 0:
        lo, hi = ctx.log(rho_max * k / 10), ctx.log(rho_max)

        def score(x):
            try:
                return _pair_margin(*_centred_pair(g2, ctx.exp(x)), D0, Dinf)
            except ValueError:
                return -ctx.inf

        xs = [lo + (hi - lo) * i / (grid - 1) for i in range(grid)]
        vals = [score(x) for x in xs]
        i = max(range(grid), key=lambda j: vals[j])
        a, b = xs[max(i - 1, 0)], xs[min(i + 1, grid - 1)]
        g = (math.sqrt(5) - 1) / 2
        for _ in range(iters):
            x1, x2 = b - g * (b - a), a + g * (b - a)
            if score(x1) >= score(x2):
                b = x2
            else:
                a = x1
        x = (a + b) / 2
        m = score(x)
        if m > best_margin:
            best, best_margin = _centred_pair(g2, ctx.exp(x)), m
    if best is None or not best_margin > profile.tol:
        raise DiskConstructionFailed(
            f"no disjoint pair D_1, D_alpha found (best inversive distance {float(best_margin):.3g}); "
            f"theta1 = {profile.theta1} is too small, or the ring left by D_0 and D_inf is too thin"
        )
    return best


def swap_map(alpha):
    """``z -> alpha (z - 1)/(z - alpha)``: sends ``1, alpha, 0, inf`` to ``0, inf, 1, alpha``."""
    alpha = mpc(alpha)
    return MoebiusMap(alpha, -alpha, 1, -alpha)


@dataclass
class Sample:
    t: float
    params: HGParams
    alpha: complex
    gamma1: MoebiusMap
    gamma2: MoebiusMap
    config: SchottkyConfig
    certificate: object = None
    m1: complex = None
    m2: complex = None
    extra: dict = field(default_factory=dict)

    def passes(self, margin):
        return self.certificate is not None and self.certificate.passes(margin)


def _build_sample(kind, profile, t):
    """Configuration at ``t`` (no certificate yet)."""
    if kind is LoopKind.MULTIPLIER_GAMMA1:
        dual = _build_sample(LoopKind.MULTIPLIER_GAMMA2, profile.dual(), t)
        params = loop_params(kind, profile, t)
        g1, g2 = normalize_generators(params)
        alpha = normalized_alpha(params)
        T = swap_map(alpha)
        d = dual.config
        cfg = SchottkyConfig(
            g1, g2,
            map_disk(T, d.D2), map_disk(T, d.D2p), map_disk(T, d.D1), map_disk(T, d.D1p),
            SpherePoint.of(0), SpherePoint.of(None), SpherePoint.of(1), SpherePoint.of(alpha),
        )
        extra = {
            "dual_alpha": complex(dual.alpha),
            "dual_m2": complex(dual.gamma2.multiplier_at(dual.alpha)),
            "conjugacy_gamma1": same_map(conjugate(T, dual.gamma2), g1, 1e-8),
            "conjugacy_gamma2": same_map(conjugate(T, dual.gamma1), g2, 1e-8),
        }
        return Sample(t, params, alpha, g1, g2, cfg, extra=extra)
    params = loop_params(kind, profile, t)
    g1, g2 = normalize_generators(params)
    alpha = normalized_alpha(params)
    D0, Dinf = _outer_disks(kind, profile)
    D1, Da = _gamma2_disks(g2, alpha, D0, Dinf, profile)
    cfg = SchottkyConfig(
        g1, g2, D0, Dinf, D1, Da,
        SpherePoint.of(0), SpherePoint.of(None), SpherePoint.of(1), SpherePoint.of(alpha),
    )
    return Sample(t, params, alpha, g1, g2, cfg)


def loop_disks(kind, profile, t, params=None):
    """``(D1, D1p, D2, D2p) = (D_0, D_inf, D_1, D_alpha)`` at time ``t``."""
    kind = LoopKind(kind)
    profile = replace(profile, kind=kind)
    _require_audit(kind, profile)
    if params is not None and kind is not LoopKind.MULTIPLIER_GAMMA1:
        g1, g2 = normalize_generators(params)
        alpha = normalized_alpha(params)
        D0, Dinf = _outer_disks(kind, profile)
        return (D0, Dinf) + _gamma2_disks(g2, alpha, D0, Dinf, profile)
    cfg = _build_sample(kind, profile, t).config
    return cfg.D1, cfg.D1p, cfg.D2, cfg.D2p


def evaluate_sample(kind, profile, t):
    s = _build_sample(kind, profile, t)
    s.certificate = certify(s.config, profile.tol)
    s.m1 = complex(s.gamma1.multiplier_at(INF))
    s.m2 = complex(s.gamma2.multiplier_at(s.alpha))
    return s


# winding -------------------------------------------------------------------------------------


def winding(f, ts, values, center=0j, max_depth=12):
    """Total argument change of ``f(t) - center`` over the samples, in turns.

    Increments above ``pi/2`` trigger bisection with fresh evaluations of
    ``f``.  Returns ``(turns, resolved)``; ``resolved`` is False if some
    increment stayed ambiguous after ``max_depth`` bisections.
    """
    resolved = True

    def inc(t0, v0, t1, v1, depth):
        nonlocal resolved
        d = _principal(cmath.phase(v1 - center) - cmath.phase(v0 - center))
        if abs(d) <= math.pi / 2:
            return d
        if depth == 0:
            resolved = False
            return d
        tm = 0.5 * (t0 + t1)
        vm = f(tm)
        return inc(t0, v0, tm, vm, depth - 1) + inc(tm, vm, t1, v1, depth - 1)

    total = 0.0
    for i in range(len(ts) - 1):
        total += inc(ts[i], values[i], ts[i + 1], values[i + 1], max_depth)
    return total / TWO_PI, resolved


def _is_integer(x, tol=1e-6):
    return abs(x - round(x)) <= tol


# report --------------------------------------------------------------------------------


@dataclass
class LoopReport:
    kind: LoopKind
    profile: LoopProfile
    constants: dict
    audit: AuditReport
    samples: list
    refined: list
    winding_alpha: float
    winding_center: complex
    delta_arg_multiplier: float
    closure_residual: float
    checks: dict
    phi_psi: PhiPsi = None
    notes: list = field(default_factory=list)

    @property
    def verdict(self):
        return all(self.checks.values())

    @property
    def min_margin(self):
        return min(s.certificate.min_margin for s in self.samples + self.refined)

    def failed_checks(self):
        return [k for k, v in self.checks.items() if not v]


def _closure(s0, s1):
    res = 0.0
    for X, Y in zip(
        (s0.config.D1, s0.config.D1p, s0.config.D2, s0.config.D2p),
        (s1.config.D1, s1.config.D1p, s1.config.D2, s1.config.D2p),
    ):
        res = max(res, circle_residual(X, Y))
    for g, h in ((s0.gamma1, s1.gamma1), (s0.gamma2, s1.gamma2)):
        a = (g.p, g.q, g.r, g.s)
        b = (h.p, h.q, h.r, h.s)
        scale = max(abs(x) for x in a)
        diff = min(max(abs(x - y) for x, y in zip(a, b)), max(abs(x + y) for x, y in zip(a, b)))
        res = max(res, float(diff / scale))
    return res


def _alpha_at(kind, profile):
    def f(t):
        return complex(normalized_alpha(loop_params(kind, profile, t)))
    return f


def _multiplier_at(kind, profile):
    def f(t):
        params = loop_params(kind, profile, t)
        g1, g2 = normalize_generators(params)
        if kind is LoopKind.MULTIPLIER_GAMMA1:
            return complex(g1.multiplier_at(INF))
        return complex(g2.multiplier_at(normalized_alpha(params)))
    return f


def trace_loop(kind, profile=None, n=None, refine=True):
    """Trace one loop, certify every sample and check the loop's claims.

    Samples ``t_i = i/n`` (``i < n``) are certified; the configuration at
    ``t = 1`` is built separately and compared with ``t = 0``.  Samples whose
    margin falls below ten times the requirement get their neighbouring
    half-steps certified as well.
    """
    kind = LoopKind(kind)
    profile = replace(profile or default_profile(kind), kind=kind)
    if n is not None:
        profile = replace(profile, n=n)
    n = profile.n
    if n < 16:
        raise ValueError("need at least 16 samples")
    audit = _require_audit(kind, profile)
    const = profile_constants(profile)
    eps = const["eps"]

    ts = [i / n for i in range(n)]
    samples = [evaluate_sample(kind, profile, t) for t in ts]
    refined = []
    if refine:
        for s in samples:
            if s.certificate.min_margin < 10 * profile.margin:
                for t in (s.t - 0.5 / n, s.t + 0.5 / n):
                    refined.append(evaluate_sample(kind, profile, t % 1.0))
    end = evaluate_sample(kind, profile, 1.0)

    loop_ts = ts + [1.0]
    alphas = [complex(s.alpha) for s in samples] + [complex(end.alpha)]
    centre = 1.0 if kind is LoopKind.ALPHA_AROUND_D1 else 0.0
    w_alpha, ok_a = winding(_alpha_at(kind, profile), loop_ts, alphas, centre)
    mults = [s.m1 if kind is LoopKind.MULTIPLIER_GAMMA1 else s.m2 for s in samples]
    mults.append(end.m1 if kind is LoopKind.MULTIPLIER_GAMMA1 else end.m2)
    w_mult, ok_m = winding(_multiplier_at(kind, profile), loop_ts, mults, 0.0)
    closure = _closure(samples[0], end)

    checks = {
        "audit": audit.ok,
        "certificates": all(s.passes(profile.margin) for s in samples + refined),
        "winding resolved": ok_a and ok_m,
        "delta arg multiplier = -2 pi": abs(w_mult * TWO_PI + TWO_PI) <= 1e-6,
        "closure": closure <= 1e-8,
        "endpoint certificate": end.passes(profile.margin),
    }
    phipsi = None
    notes = []
    if kind is LoopKind.ALPHA_AROUND_D0:
        R = const["R"]
        phipsi = phi_psi_grid(profile, n)
        checks.update(phipsi.check())
        checks["|winding alpha around 0| = 1"] = _is_integer(w_alpha) and round(abs(w_alpha)) == 1
        checks["eps R <= |alpha| < R"] = all(eps * R * (1 - 1e-12) <= abs(a) < R for a in alphas)
        fwd = 0.0
        for t, ph, ps in zip(phipsi.t, phipsi.phi, phipsi.psi):
            val = g_function(0.5 + ph - 0.5j * (profile.theta0 + ps), 1 - 1j * profile.theta0)
            fwd = max(fwd, abs(val - R * cmath.exp(-2j * math.pi * t)))
        checks["phi/psi forward consistency"] = fwd <= 1e-9
        ga = [g_function(s.params.a, s.params.c) for s in samples]
        gb = [g_function(s.params.b, s.params.c) for s in samples]
        checks["eps <= g(a(t)) < 1"] = all(abs(x.imag) < 1e-9 and eps - 1e-12 <= x.real < 1 for x in ga)
        checks["|g(b(t))| = R"] = all(abs(abs(x) - R) <= 1e-9 for x in gb)
        notes.append("the paired-disk existence is verified along the sampled path only, not for the whole ring")
    elif kind is LoopKind.ALPHA_AROUND_D1:
        r, R, s_ = const["r"], const["R"], const["s"]
        ga = g_function(samples[0].params.a, samples[0].params.c)
        gb = [abs(g_function(s.params.b, s.params.c)) for s in samples]
        half = complex(normalized_alpha(loop_params(kind, profile, 0.5)))
        a0, a1 = alphas[0], alphas[-1]
        checks["|winding alpha around 1| = 1"] = _is_integer(w_alpha) and round(abs(w_alpha)) == 1
        checks["r <= |g(b(t))| <= R"] = all(r - 1e-12 <= x <= R + 1e-12 for x in gb)
        checks["eps < g(a) < eps + s"] = eps < ga.real < eps + s_
        checks["alpha in ring eps r <= |z| <= (eps + s) R"] = all(
            eps * r - 1e-12 <= abs(a) <= (eps + s_) * R + 1e-12 for a in alphas)
        checks["alpha(0) = alpha(1) <= (eps + s) r < 1 < eps R <= |alpha(1/2)|"] = (
            abs(a0 - a1) <= 1e-9 and a0.real <= (eps + s_) * r + 1e-12
            and (eps + s_) * r < 1 < eps * R <= abs(half) + 1e-12
        )
    else:
        dual = profile.dual() if kind is LoopKind.MULTIPLIER_GAMMA1 else profile
        deps = ctx.exp(-ctx.pi * mpf(dual.theta0))
        dr = (1 / deps - deps) / (ctx.exp(ctx.pi * (mpf(dual.theta0) + dual.theta1 + dual.theta2)) - 1)
        checks["winding alpha around 0 = 0"] = _is_integer(w_alpha) and round(w_alpha) == 0
        # alpha = g(a) sits within r ~ e^{-2 pi th1} of eps: evaluate it in working precision
        dual_params = [loop_params(LoopKind.MULTIPLIER_GAMMA2, dual, s.t) for s in samples]
        dual_alphas = [g_function_mp(q.a, q.c) * g_function_mp(q.b, q.c) for q in dual_params]
        checks["alpha in disk(eps, r)"] = all(abs(a - deps) <= dr * (1 + 1e-9) for a in dual_alphas)
        checks["eps^2 (1 + r) < eps - r <= |alpha| <= eps + r < 1"] = (
            deps ** 2 * (1 + dr) < deps - dr and deps + dr < 1
            and all(deps - dr - 1e-12 <= abs(a) <= deps + dr + 1e-12 for a in dual_alphas)
        )
        if kind is LoopKind.MULTIPLIER_GAMMA1:
            worst = max(abs(s.m1 - s.extra["dual_m2"]) / abs(s.m1) for s in samples)
            checks["gamma1 multiplier = dual gamma2 multiplier"] = worst <= 1e-9
            checks["conjugate to the dual loop"] = all(
                s.extra["conjugacy_gamma1"] and s.extra["conjugacy_gamma2"] for s in samples)

    return LoopReport(
        kind, profile, const, audit, samples, refined, w_alpha, centre,
        w_mult * TWO_PI, closure, checks, phipsi, notes,
    )


def base_point(theta0, theta1, theta2, tol=None):
    """Certified configuration for pure-imaginary exponents ``(i th0, i th1, i th2)``.

    Disks ``D_0``, ``D_inf`` follow the first loop's recipe (radii
    ``eps r`` and ``r/eps``); ``D_1``, ``D_alpha`` come from the same
    search the loops use.
    """
    profile = LoopProfile(LoopKind.ALPHA_AROUND_D0, theta0=theta0, theta1=theta1,
                          tol=DEFAULT_TOL if tol is None else tol)
    params = HGParams.from_thetas(theta0, theta1, theta2)
    g1, g2 = normalize_generators(params)
    alpha = normalized_alpha(params)
    D0, Dinf = _outer_disks(LoopKind.ALPHA_AROUND_D0, profile)
    D1, Da = _gamma2_disks(g2, alpha, D0, Dinf, profile)
    cfg = SchottkyConfig(g1, g2, D0, Dinf, D1, Da, SpherePoint.of(0), SpherePoint.of(None),
                         SpherePoint.of(1), SpherePoint.of(alpha))
    cert = certify(cfg, profile.tol)
    if not cert.verdict:
        raise DiskConstructionFailed("base point does not certify: " + "; ".join(cert.failures))
    return cfg


def minimal_theta1(kind, profile=None, lo=0.5, hi=None, n=16, iters=12):
    """Smallest ``theta1`` (by bisection) for which the loop traces and certifies at ``n`` samples."""
    kind = LoopKind(kind)
    profile = replace(profile or default_profile(kind), kind=kind, n=n)
    hi = hi if hi is not None else profile.theta1

    def ok(th1):
        p = replace(profile, theta1=th1)
        if kind is LoopKind.MULTIPLIER_GAMMA2:
            p = replace(p, theta2=th1)
        try:
            return trace_loop(kind, p, refine=False).verdict
        except (ProfileNotAudited, DiskConstructionFailed, BranchJump):
            return False

    if not ok(hi):
        raise DiskConstructionFailed(f"loop fails already at theta1 = {hi}")
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi
