"""Genus-2 Schottky configurations: certificate, separating circles, orbits.

A configuration is two loxodromic maps with four disks such that
``gamma1(D1) = complement(D1p)`` and ``gamma2(D2) = complement(D2p)``.
Reduced words use the letters ``a, A, b, B`` for ``gamma1, gamma1^-1,
gamma2, gamma2^-1``; ``a`` sends everything outside ``D1`` into ``D1p``,
``A`` everything outside ``D1p`` into ``D1``, and likewise for ``b``/``B``.
"""

import itertools
import math
from dataclasses import dataclass, field

from ._prec import DEFAULT_TOL, ctx, mpf, workdps
from .apollonius import concentric_centers, to_infinity_map
from .disk import (
    GeneralizedDisk, complement, contained, contains, disjoint, from_center_radius,
    map_disk, circle_residual,
)
from .sphere import SpherePoint, MoebiusMap, apply, compose, conjugate, fixed_points, inverse

DEFAULT_MARGIN = 1e-6
MAX_DEPTH = 12

LETTERS = ("a", "A", "b", "B")
_INVERSE_LETTER = {"a": "A", "A": "a", "b": "B", "B": "b"}


class NonLoxodromicGenerator(ValueError):
    pass


class DepthTooLarge(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SchottkyConfig:
    gamma1: MoebiusMap
    gamma2: MoebiusMap
    D1: GeneralizedDisk
    D1p: GeneralizedDisk
    D2: GeneralizedDisk
    D2p: GeneralizedDisk
    # marked fixed points: f1 in D1, f1p in D1p, f2 in D2, f2p in D2p
    f1: SpherePoint = None
    f1p: SpherePoint = None
    f2: SpherePoint = None
    f2p: SpherePoint = None

    @property
    def disks(self):
        return {"D1": self.D1, "D1p": self.D1p, "D2": self.D2, "D2p": self.D2p}

    def generator(self, letter):
        g = self.gamma1 if letter in "aA" else self.gamma2
        return g if letter.islower() else inverse(g)

    def target(self, letter):
        """Disk into which ``letter`` maps the complement of its source disk."""
        return {"a": self.D1p, "A": self.D1, "b": self.D2p, "B": self.D2}[letter]

    def transported(self, T):
        """The same configuration in the coordinate ``T(z)``."""
        pts = [None if f is None else T(f) for f in (self.f1, self.f1p, self.f2, self.f2p)]
        return SchottkyConfig(
            conjugate(T, self.gamma1), conjugate(T, self.gamma2),
            map_disk(T, self.D1), map_disk(T, self.D1p),
            map_disk(T, self.D2), map_disk(T, self.D2p), *pts,
        )


@dataclass
class Certificate:
    disjoint: dict
    margins: dict
    circle_residuals: dict
    orientation: dict
    localization: dict
    tol: float
    verdict: bool = False
    failures: list = field(default_factory=list)

    @property
    def min_margin(self):
        return min(self.margins.values())

    def passes(self, margin=0.0):
        """Verdict with a required disjointness margin on top of ``tol``."""
        return self.verdict and self.min_margin >= margin

    def to_dict(self):
        return {
            "verdict": self.verdict,
            "tol": self.tol,
            "min_margin": self.min_margin,
            "margins": self.margins,
            "disjoint": self.disjoint,
            "circle_residuals": self.circle_residuals,
            "orientation": self.orientation,
            "localization": self.localization,
            "failures": list(self.failures),
        }


def _localize(g, D, Dp, marked, marked_p):
    """Fixed points of ``g``: one inside ``D``, the other inside ``Dp``."""
    pts = list(fixed_points(g))
    out = {}
    if marked is not None and marked_p is not None:
        for name, f, X in (("source", marked, D), ("target", marked_p, Dp)):
            fixed = min(f.chordal(q) for q in pts) <= 1e-8
            out[name] = bool(fixed and contains(X, f) == "inside")
        return out
    ok1 = contains(D, pts[0]) == "inside" and contains(Dp, pts[1]) == "inside"
    ok2 = contains(D, pts[1]) == "inside" and contains(Dp, pts[0]) == "inside"
    out["source"] = out["target"] = bool(ok1 or ok2)
    return out


def certify(cfg, tol=None):
    """Numerical Schottky certificate with explicit margins.

    Checks (i) the six disk pairs are disjoint with inversive-distance
    margin above ``tol``; (ii) each generator carries its source circle onto
    its target circle (residual at most ``tol``); (iii) the interior of the
    source disk lands inside the complement of the target disk; (iv) each
    generator has one fixed point in each of its disks.
    """
    tol = DEFAULT_TOL if tol is None else tol
    for name, g in (("gamma1", cfg.gamma1), ("gamma2", cfg.gamma2)):
        if not g.is_loxodromic:
            raise NonLoxodromicGenerator(f"{name} is {g.kind}")
    disks = cfg.disks
    dis, margins = {}, {}
    for (n1, X), (n2, Y) in itertools.combinations(disks.items(), 2):
        ok, m = disjoint(X, Y, tol)
        dis[f"{n1}|{n2}"] = ok
        margins[f"{n1}|{n2}"] = m
    resid, orient, loc = {}, {}, {}
    for name, g, D, Dp, f, fp in (
        ("gamma1", cfg.gamma1, cfg.D1, cfg.D1p, cfg.f1, cfg.f1p),
        ("gamma2", cfg.gamma2, cfg.D2, cfg.D2p, cfg.f2, cfg.f2p),
    ):
        resid[name] = circle_residual(map_disk(g, D), complement(Dp))
        orient[name] = contains(complement(Dp), g(D.interior_point())) == "inside"
        for k, v in _localize(g, D, Dp, f, fp).items():
            loc[f"{name}.{k}"] = v
    cert = Certificate(dis, margins, resid, orient, loc, tol)
    fails = [f"disjoint {k} (margin {margins[k]:.3g})" for k, v in dis.items() if not v]
    fails += [f"circle match {k} (residual {v:.3g})" for k, v in resid.items() if not v <= tol]
    fails += [f"orientation {k}" for k, v in orient.items() if not v]
    fails += [f"fixed point {k}" for k, v in loc.items() if not v]
    cert.failures = fails
    cert.verdict = not fails
    return cert


# separating circles -----------------------------------------------------------

PARTITIONS = (
    (("D1", "D1p"), ("D2", "D2p")),
    (("D1", "D2"), ("D1p", "D2p")),
    (("D1", "D2p"), ("D1p", "D2")),
)


def _radial_extent(E, o):
    """``(min, max)`` of ``|z - o|`` over the disk ``E``."""
    if E.A > 0:
        dist = abs(E.center - o)
        return max(mpf(0), dist - E.radius), dist + E.radius
    if E.A < 0:
        dist = abs(E.center - o)
        # outside a circle: reaches infinity; nearest point is 0 away if o is inside E
        lo = E.radius - dist if dist < E.radius else mpf(0)
        return lo, ctx.inf
    return mpf(0), ctx.inf


def _separator_in_pencil(X, Y, Z, W):
    """A circle of the coaxal pencil of ``X``, ``Z`` with ``X, Y`` outside and ``Z, W`` inside.

    After sending the concentric center of ``X`` to infinity, ``X`` is the
    outside of a circle ``|w - o| = R_X`` and ``Z`` the disk ``|w - o| <= R_Z``;
    the admissible radii form an interval and its geometric midpoint is used.
    """
    F = concentric_centers(X, Z).F
    T = to_infinity_map(F)
    EX, EY, EZ, EW = (map_disk(T, V) for V in (X, Y, Z, W))
    o = EZ.center
    lo_y, _ = _radial_extent(EY, o)
    _, hi_w = _radial_extent(EW, o)
    lo = max(EZ.radius, hi_w)
    hi = min(EX.radius, lo_y)
    if not hi > lo or ctx.isinf(lo):
        return None
    rho = ctx.sqrt(lo * hi)
    return map_disk(inverse(T), from_center_radius(o, rho))


def separating_circle_check(cfg):
    """Look for a circle separating two of the four disks from the other two.

    Scans the coaxal circles of every cross pair of each balanced 2+2
    partition; a sufficient search, not an exhaustive one.  Returns
    ``(found, disk, partition)`` where ``disk`` contains the second pair.
    """
    disks = cfg.disks
    for (p, q) in PARTITIONS:
        for x, y in (p, p[::-1]):
            for z, w in (q, q[::-1]):
                C = _separator_in_pencil(disks[x], disks[y], disks[z], disks[w])
                if C is None:
                    continue
                ok = (disjoint(disks[x], C)[0] and disjoint(disks[y], C)[0]
                      and contained(disks[z], C)[0] and contained(disks[w], C)[0])
                if ok:
                    return True, C, (p, q)
    return False, None, None


# orbits -------------------------------------------------------------------------


def reduced_words(depth):
    """Reduced words of length exactly ``depth`` in lexicographic order of ``a, A, b, B``."""
    if depth == 0:
        return [""]
    words = []
    for w in reduced_words(depth - 1):
        for x in LETTERS:
            if w and _INVERSE_LETTER[w[-1]] == x:
                continue
            words.append(w + x)
    return words


_SEED_LETTER = {"D1": "A", "D1p": "a", "D2": "B", "D2p": "b"}


def _seeds(cfg):
    # a seed inside target(y) behaves like the word y: it may be followed by x != y^-1
    return [(name, _SEED_LETTER[name], X.interior_point()) for name, X in cfg.disks.items()]


def orbit_precision(cfg, depth):
    """Working digits that keep depth-``depth`` disk images resolvable."""
    big = max(abs(cfg.gamma1.multiplier), abs(cfg.gamma2.multiplier))
    per_letter = max(1.0, math.log10(float(big)))
    return int(40 + 2 * depth * per_letter)


def _orbit_nodes(cfg, depth):
    """Depth-first records ``(word, seed name, point)`` for admissible words."""
    if depth > MAX_DEPTH:
        raise DepthTooLarge(f"depth {depth} > {MAX_DEPTH}")
    gens = {x: cfg.generator(x) for x in LETTERS}
    seeds = _seeds(cfg)
    out = []
    for name, _, pt in seeds:
        out.append(("", name, pt))
    # words are applied right to left: the point for x1...xk is x1(...(xk(seed)))
    for k in range(1, depth + 1):
        for w in reduced_words(k):
            last = w[-1]
            for name, sl, pt in seeds:
                if _INVERSE_LETTER[last] == sl:
                    continue
                for x in reversed(w):
                    pt = apply(gens[x], pt)
                out.append((w, name, pt))
    return out


def orbit_sample(cfg, depth):
    """Images of the four disk seeds under reduced words of length at most ``depth``.

    Seeds are the disks' interior points (centers, or infinity for a disk
    containing it); a word may act on a seed only if its first-applied letter
    does not send that disk's interior out (``x`` never acts on the target
    disk of ``x^-1``).  Ordering: by word length, then lexicographically in
    ``a, A, b, B``, then by seed ``D1, D1p, D2, D2p``.
    """
    with workdps(orbit_precision(cfg, depth)):
        nodes = _orbit_nodes(cfg, depth)
    return [pt for _, _, pt in nodes]


@dataclass
class NestingReport:
    depth: int
    word_counts: dict
    points_checked: int
    failures: list
    min_margin: float

    @property
    def ok(self):
        return not self.failures and all(
            self.word_counts[d] == (4 * 3 ** (d - 1) if d else 1) for d in self.word_counts
        )


def check_nesting(cfg, depth):
    """Ping-pong nesting of orbit points and disk images up to ``depth``.

    For a reduced word ``w = x1...xk`` let ``Disk(w) = x1...x(k-1)(target(xk))``.
    Every orbit point of ``w`` must lie in ``Disk(w)`` and in ``Disk`` of its
    length-``(k-1)`` prefix, and ``Disk(w)`` must sit inside the prefix disk.
    """
    failures = []
    min_margin = math.inf
    counts = {d: len(reduced_words(d)) for d in range(depth + 1)}
    checked = 0
    with workdps(orbit_precision(cfg, depth)):
        gens = {x: cfg.generator(x) for x in LETTERS}
        prefix_map = {"": MoebiusMap.identity()}
        disk_of = {}
        for k in range(1, depth + 1):
            for w in reduced_words(k):
                prefix_map[w] = compose(prefix_map[w[:-1]], gens[w[-1]])
                disk_of[w] = map_disk(prefix_map[w[:-1]], cfg.target(w[-1]))
                if k >= 2:
                    ok, m = contained(disk_of[w], disk_of[w[:-1]], tol=0.0)
                    min_margin = min(min_margin, m)
                    if not ok:
                        failures.append(f"Disk({w}) not inside Disk({w[:-1]})")
        for w, name, pt in _orbit_nodes(cfg, depth):
            if not w:
                continue
            checked += 1
            targets = [w] + ([w[:-1]] if len(w) >= 2 else [])
            for v in targets:
                if contains(disk_of[v], pt, tol=0.0) != "inside":
                    failures.append(f"point {w}({name}) not inside Disk({v})")
    return NestingReport(depth, counts, checked, failures, float(min_margin))
