"""Closed disks on the Riemann sphere as oriented Hermitian forms.

A disk is ``{z : A|z|^2 + conj(B) z + B conj(z) + D <= 0}``, i.e. the set
where ``v* H v <= 0`` for ``v = (z, 1)`` and ``H = [[A, B], [conj(B), D]]``.
``A > 0`` is a bounded disk with center ``-B/A``, ``A < 0`` a disk containing
infinity and ``A == 0`` a closed half-plane.  Coefficients are scaled so that
``max(|A|, |B|, |D|) == 1``; negating all three gives the complementary disk.

Transport by a Moebius map is the congruence ``H -> M^-* H M^-1``: exact, no
boundary refitting, and it commutes with complementation.
"""

from dataclasses import dataclass

from ._prec import ctx, mpc, mpf
from .sphere import SpherePoint, MoebiusMap, inverse

DISJOINT_TOL = 1e-10
CONTAINS_TOL = 1e-12


class NonpositiveRadius(ValueError):
    pass


class DegenerateDisk(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class GeneralizedDisk:
    A: object
    B: object
    D: object

    def __post_init__(self):
        A, B, D = mpf(ctx.re(self.A)), mpc(self.B), mpf(ctx.re(self.D))
        scale = max(abs(A), abs(B), abs(D))
        if scale == 0:
            raise DegenerateDisk("zero Hermitian form")
        A, B, D = A / scale, B / scale, D / scale
        if abs(B) ** 2 - A * D <= 0:
            raise DegenerateDisk("A*D - |B|^2 must be negative")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "D", D)

    @property
    def det(self):
        """``|B|^2 - A D``, positive for every valid disk."""
        return abs(self.B) ** 2 - self.A * self.D

    @property
    def contains_infinity(self):
        return self.A < 0

    @property
    def is_half_plane(self):
        return self.A == 0

    @property
    def is_bounded(self):
        return self.A > 0

    @property
    def center(self):
        """Center of the boundary circle (``None`` for a half-plane)."""
        if self.A == 0:
            return None
        return -self.B / self.A

    @property
    def radius(self):
        if self.A == 0:
            return ctx.inf
        return ctx.sqrt(self.det) / abs(self.A)

    def form(self, z):
        """``v* H v`` at the homogeneous point ``z`` (unnormalized)."""
        z = SpherePoint.of(z)
        z0, z1 = z.z0, z.z1
        return (self.A * abs(z0) ** 2 + 2 * ctx.re(ctx.conj(self.B) * z0 * ctx.conj(z1))
                + self.D * abs(z1) ** 2)

    def boundary_point(self):
        if self.A == 0:
            # conj(B) z + B conj(z) = -D  is solved by z = -D B / (2 |B|^2)
            return SpherePoint.of(-self.D * self.B / (2 * abs(self.B) ** 2))
        return SpherePoint.of(self.center + self.radius)

    def interior_point(self):
        """A point well inside the disk (center, infinity, or off the line)."""
        if self.A > 0:
            return SpherePoint.of(self.center)
        if self.A < 0:
            return SpherePoint(1, 0)
        foot = -self.D * self.B / (2 * abs(self.B) ** 2)
        # the form decreases along -B
        return SpherePoint.of(foot - self.B / abs(self.B))

    def complement(self):
        return complement(self)

    def hermitian(self):
        return (float(self.A), complex(self.B), float(self.D))

    def __repr__(self):
        if self.A > 0:
            return f"GeneralizedDisk(center={complex(self.center):.6g}, radius={float(self.radius):.6g})"
        if self.A < 0:
            return f"GeneralizedDisk(outside center={complex(self.center):.6g}, radius={float(self.radius):.6g})"
        return f"GeneralizedDisk(half-plane B={complex(self.B):.6g}, D={float(self.D):.6g})"


def from_center_radius(c, r):
    """Closed disk ``|z - c| <= r``."""
    c, r = mpc(c), mpf(r)
    if not r > 0 or ctx.isinf(r):
        raise NonpositiveRadius(f"radius must be positive and finite, got {r}")
    return GeneralizedDisk(1, -c, abs(c) ** 2 - r * r)


def outside(c, r):
    """Closed disk ``|z - c| >= r`` (contains infinity)."""
    return complement(from_center_radius(c, r))


def half_plane(point, normal):
    """Closed half-plane of points ``z`` with ``Re(conj(normal) (z - point)) <= 0``."""
    point, normal = mpc(point), mpc(normal)
    # form 2 Re(conj(B) z) + D with B = normal / 2
    B = normal / 2
    return GeneralizedDisk(0, B, -2 * ctx.re(ctx.conj(B) * point))


def complement(X):
    return GeneralizedDisk(-X.A, -X.B, -X.D)


def map_disk(M, X):
    """Image of ``X`` under ``M`` by Hermitian congruence."""
    N = inverse(M)
    # H' = N* H N with N = [[a, b], [c, d]]
    a, b, c, d = N.p, N.q, N.r, N.s
    A, B, D = X.A, X.B, X.D
    Bc = ctx.conj(B)
    # columns of H N
    h00 = A * a + B * c
    h01 = A * b + B * d
    h10 = Bc * a + D * c
    h11 = Bc * b + D * d
    A2 = ctx.conj(a) * h00 + ctx.conj(c) * h10
    B2 = ctx.conj(a) * h01 + ctx.conj(c) * h11
    D2 = ctx.conj(b) * h01 + ctx.conj(d) * h11
    return GeneralizedDisk(ctx.re(A2), B2, ctx.re(D2))


def inversive_product(X, Y):
    """Oriented inversive product of two disks.

    ``> 1`` when the closed disks are disjoint (or cover the sphere between
    them), ``1`` at external tangency, ``|.| < 1`` when the boundaries cross
    and ``< -1`` for nested disks.  Invariant under Moebius transport.
    """
    num = X.A * Y.D + Y.A * X.D - 2 * ctx.re(X.B * ctx.conj(Y.B))
    return num / (2 * ctx.sqrt(X.det * Y.det))


def disjoint(X, Y, tol=DISJOINT_TOL):
    """``(is_disjoint, margin)`` for two closed disks.

    The margin is the inversive distance ``acosh(<X, Y>)`` when the disks are
    disjoint and non-positive otherwise, so a positive margin is a
    Moebius-invariant certificate of separation.  Tangent disks meet.
    """
    I = inversive_product(X, Y)
    if I <= 1:
        margin = I - 1
    else:
        # circles do not meet: either the disks are disjoint or they cover the sphere
        separated = Y.form(X.boundary_point()) > 0
        margin = ctx.acosh(I) if separated else -ctx.acosh(I)
    margin = float(margin)
    return margin > tol, margin


def contained(X, Y, tol=DISJOINT_TOL):
    """``(X inside Y, margin)`` via disjointness of ``X`` and the complement of ``Y``."""
    return disjoint(X, complement(Y), tol)


def radial_offset(X, z):
    """Signed distance of ``z`` from the boundary, relative to the disk's size.

    Negative inside.  For a circle this is ``(|z - c| - rho)/rho`` with the
    sign flipped when the disk contains infinity; for a half-plane it is the
    Euclidean signed distance divided by ``max(1, |z|)``.
    """
    z = SpherePoint.of(z)
    if X.A != 0:
        sign = 1 if X.A > 0 else -1
        if z.is_infinity:
            return ctx.inf * sign
        rho = X.radius
        return sign * (abs(z.value - X.center) - rho) / rho
    if z.is_infinity:
        return mpf(0)
    w = z.value
    dist = (2 * ctx.re(ctx.conj(X.B) * w) + X.D) / (2 * abs(X.B))
    return dist / max(1, abs(w))


def contains(X, z, tol=CONTAINS_TOL):
    """``'inside'``, ``'boundary'`` or ``'outside'``."""
    off = radial_offset(X, z)
    if abs(off) <= tol:
        return "boundary"
    return "inside" if off < 0 else "outside"


def frame(X):
    """A Moebius map sending the unit circle onto the boundary of ``X``."""
    if X.A != 0:
        c, rho = X.center, X.radius
        return MoebiusMap(rho, c, 0, 1)
    # line: real axis -> line through the foot point, direction i*B
    foot = -X.D * X.B / (2 * abs(X.B) ** 2)
    u = 1j * X.B / abs(X.B)
    line = MoebiusMap(u, foot, 0, 1)
    # Cayley transform inverse: unit circle -> real axis, w -> i (1 + w)/(1 - w)
    cayley_inv = MoebiusMap(1j, 1j, -1, 1)
    return line @ cayley_inv


def circle_residual(X, Y):
    """Orientation-blind mismatch between the boundary circles of ``X`` and ``Y``.

    Each circle is pulled back by the other's frame and its normalized
    Hermitian triple compared with that of the unit circle ``(1, 0, -1)``;
    the larger of the two comparisons is returned.  Working in the frame
    keeps the test scale-aware for tiny circles far from the origin.
    """
    def one_way(P, Q):
        Qf = map_disk(inverse(frame(P)), Q)
        plus = max(abs(Qf.A - 1), abs(Qf.B), abs(Qf.D + 1))
        minus = max(abs(Qf.A + 1), abs(Qf.B), abs(Qf.D - 1))
        return min(plus, minus)

    return float(max(one_way(X, Y), one_way(Y, X)))


def same_circle(X, Y, tol=1e-9):
    return circle_residual(X, Y) <= tol
