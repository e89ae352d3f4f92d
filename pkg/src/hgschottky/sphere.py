"""Points of the Riemann sphere and Moebius transformations.

Points are homogeneous pairs ``(z0 : z1)`` with ``z = z0/z1`` and infinity
stored as ``(1 : 0)``.  A map with matrix ``[[p, q], [r, s]]`` acts on
column vectors, so ``z -> (p z + q)/(r z + s)``, and composition is matrix
multiplication: ``compose(M1, M2)`` is "apply ``M2`` first, then ``M1``".

Multiplier convention
---------------------
For a fixed point ``f`` the multiplier *at* ``f`` is the derivative of the
map there (computed projectively, so it is defined at infinity as well).
The two fixed points of a loxodromic map have reciprocal multipliers.
``fixed_points`` always returns the pair ordered ``(repelling, attracting)``
and ``multiplier`` is the multiplier at the first of them, hence
``|multiplier| > 1`` for every loxodromic map: when ``|m| > 1`` the second
stored fixed point is the attracting one.  ``multiplier_at`` gives the value
at either fixed point, which is how the paired-disk code below asks for the
"contracting" multiplier of a generator.
"""

from dataclasses import dataclass
from functools import cached_property

from ._prec import ctx, mpc

POINT_TOL = 1e-9
PARABOLIC_TOL = 1e-10


class IdentityMap(ValueError):
    """Raised when an operation needs a non-identity map."""


class CoincidentFixedPoints(ValueError):
    pass


class DegenerateMatrix(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SpherePoint:
    """Homogeneous coordinates ``(z0 : z1)``, rescaled so the larger has modulus 1."""

    z0: object
    z1: object

    def __post_init__(self):
        z0, z1 = mpc(self.z0), mpc(self.z1)
        scale = max(abs(z0), abs(z1))
        if scale == 0:
            raise ValueError("(0 : 0) is not a point of the sphere")
        object.__setattr__(self, "z0", z0 / scale)
        object.__setattr__(self, "z1", z1 / scale)

    @classmethod
    def of(cls, z):
        """Coerce a complex number, ``inf``/``None`` (infinity) or a point."""
        if isinstance(z, SpherePoint):
            return z
        if z is None:
            return INF
        z = mpc(z)
        if ctx.isinf(z.real) or ctx.isinf(z.imag):
            return INF
        return cls(z, 1)

    @property
    def is_infinity(self):
        return self.z1 == 0

    @property
    def value(self):
        """Affine coordinate as an ``mpc``; ``mpc(inf)`` at infinity."""
        if self.z1 == 0:
            return ctx.mpc(ctx.inf)
        return self.z0 / self.z1

    def __complex__(self):
        if self.z1 == 0:
            return complex(float("inf"), 0.0)
        return complex(self.z0 / self.z1)

    def chordal(self, other):
        """Chordal distance (sphere of unit diameter): ``|z - w| / sqrt((1+|z|^2)(1+|w|^2))``."""
        other = SpherePoint.of(other)
        num = abs(self.z0 * other.z1 - self.z1 * other.z0)
        den = ctx.sqrt(_norm2(self.z0, self.z1) * _norm2(other.z0, other.z1))
        return num / den

    def close(self, other, tol=POINT_TOL):
        return self.chordal(other) <= tol

    def __repr__(self):
        if self.z1 == 0:
            return "SpherePoint(inf)"
        return f"SpherePoint({complex(self)!r})"


def _norm2(a, b):
    return abs(a) ** 2 + abs(b) ** 2


INF = SpherePoint(1, 0)
ZERO = SpherePoint(0, 1)


def chordal(p, q):
    return SpherePoint.of(p).chordal(SpherePoint.of(q))


@dataclass(frozen=True, eq=False)
class MoebiusMap:
    """Projective 2x2 complex matrix, stored with determinant 1.

    The determinant-1 representative is only defined up to sign; nothing in
    this package depends on which sign is kept.
    """

    p: object
    q: object
    r: object
    s: object

    def __post_init__(self):
        p, q, r, s = (mpc(x) for x in (self.p, self.q, self.r, self.s))
        det = p * s - q * r
        if det == 0:
            raise DegenerateMatrix("matrix is singular")
        k = ctx.sqrt(det)
        for name, x in zip("pqrs", (p, q, r, s)):
            object.__setattr__(self, name, x / k)

    # construction -------------------------------------------------------

    @classmethod
    def from_matrix(cls, m):
        return cls(m[0][0], m[0][1], m[1][0], m[1][1])

    @classmethod
    def from_right_action(cls, m):
        """Induced map on ``z = u1/u2`` of a matrix acting on the row ``(u1, u2)`` from the right.

        ``(u1, u2) -> (u1 A + u2 C, u1 B + u2 D)`` for ``m = [[A, B], [C, D]]``
        gives ``z -> (A z + C)/(B z + D)``: the Moebius matrix is the transpose.
        Every circuit matrix enters the geometry through here.
        """
        return cls(m[0][0], m[1][0], m[0][1], m[1][1])

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @property
    def matrix(self):
        return ((self.p, self.q), (self.r, self.s))

    def as_complex(self):
        return [[complex(self.p), complex(self.q)], [complex(self.r), complex(self.s)]]

    # action ---------------------------------------------------------------

    def __call__(self, z):
        return apply(self, z)

    def __matmul__(self, other):
        return compose(self, other)

    @property
    def trace(self):
        return self.p + self.s

    @property
    def trace_squared(self):
        return self.trace ** 2

    @cached_property
    def kind(self):
        """One of ``identity``, ``parabolic``, ``elliptic``, ``loxodromic``."""
        return classify(self)

    @property
    def is_loxodromic(self):
        return self.kind == "loxodromic"

    @cached_property
    def _eigen(self):
        return _eigen_data(self)

    def fixed_points(self):
        return fixed_points(self)

    @property
    def multiplier(self):
        """Multiplier at the first (repelling) fixed point; ``|m| >= 1``."""
        if self.kind == "identity":
            return mpc(1)
        if self.kind == "parabolic":
            return mpc(1)
        lam_small, _, lam_big, _ = self._eigen
        return 1 / lam_small ** 2

    def multiplier_at(self, point, tol=1e-6):
        """Derivative of the map at one of its fixed points."""
        point = SpherePoint.of(point)
        if self.kind in ("identity", "parabolic"):
            return mpc(1)
        lam_small, v_small, lam_big, v_big = self._eigen
        d_small, d_big = point.chordal(v_small), point.chordal(v_big)
        if min(d_small, d_big) > tol:
            raise ValueError(f"{point!r} is not a fixed point (chordal distance {float(min(d_small, d_big)):.3g})")
        lam = lam_small if d_small <= d_big else lam_big
        return 1 / lam ** 2

    def inverse(self):
        return inverse(self)

    def __repr__(self):
        m = self.as_complex()
        return f"MoebiusMap([[{m[0][0]:.6g}, {m[0][1]:.6g}], [{m[1][0]:.6g}, {m[1][1]:.6g}]], kind={self.kind})"


def apply(M, z):
    """Image of a point; total on the sphere."""
    z = SpherePoint.of(z)
    return SpherePoint(M.p * z.z0 + M.q * z.z1, M.r * z.z0 + M.s * z.z1)


def compose(M1, M2):
    """``M1 o M2`` (``M2`` acts first)."""
    return MoebiusMap(
        M1.p * M2.p + M1.q * M2.r,
        M1.p * M2.q + M1.q * M2.s,
        M1.r * M2.p + M1.s * M2.r,
        M1.r * M2.q + M1.s * M2.s,
    )


def inverse(M):
    return MoebiusMap(M.s, -M.q, -M.r, M.p)


def conjugate(T, M):
    """``T M T^-1``: fixed points move by ``T``, multipliers are unchanged."""
    return compose(compose(T, M), inverse(T))


def classify(M, parabolic_tol=PARABOLIC_TOL):
    scale = max(abs(M.p), abs(M.q), abs(M.r), abs(M.s))
    off = max(abs(M.q), abs(M.r), abs(M.p - M.s))
    if off <= 1e-12 * scale:
        return "identity"
    t2 = M.trace_squared
    if abs(t2 - 4) < parabolic_tol:
        return "parabolic"
    if abs(t2.imag) <= parabolic_tol * max(1, abs(t2)) and -parabolic_tol <= t2.real < 4:
        return "elliptic"
    return "loxodromic"


def _eigenvector(M, lam):
    # both rows of (M - lam I) annihilate the eigenvector; use the better one
    v1 = (M.q, lam - M.p)
    v2 = (lam - M.s, M.r)
    if _norm2(*v1) >= _norm2(*v2):
        return SpherePoint(*v1)
    return SpherePoint(*v2)


def _eigen_data(M):
    tr = M.trace
    disc = ctx.sqrt(tr * tr - 4)
    lam_a = (tr + disc) / 2
    lam_b = (tr - disc) / 2
    lam_big = lam_a if abs(lam_a) >= abs(lam_b) else lam_b
    lam_small = 1 / lam_big  # det = 1, avoids cancellation in tr - disc
    return lam_small, _eigenvector(M, lam_small), lam_big, _eigenvector(M, lam_big)


def fixed_points(M):
    """Fixed points ordered ``(repelling, attracting)``.

    Parabolic maps report their single fixed point twice; elliptic maps
    return both in a deterministic order.
    """
    kind = M.kind
    if kind == "identity":
        raise IdentityMap("every point is fixed by the identity")
    lam_small, v_small, lam_big, v_big = M._eigen
    if kind == "parabolic":
        return v_big, v_big
    return v_small, v_big


def multiplier(M):
    return M.multiplier


def from_fixed_points_multiplier(f, f2, m, tol=POINT_TOL):
    """Map fixing ``f`` and ``f2`` whose multiplier at ``f`` is ``m``.

    Conjugate of ``w -> m w`` by the map sending ``0 -> f`` and ``inf -> f2``.
    """
    f, f2 = SpherePoint.of(f), SpherePoint.of(f2)
    m = mpc(m)
    if m == 0:
        raise ValueError("multiplier must be nonzero")
    if f.chordal(f2) <= tol:
        raise CoincidentFixedPoints(f"{f!r} and {f2!r} coincide")
    T = MoebiusMap(f2.z0, f.z0, f2.z1, f.z1)
    return conjugate(T, MoebiusMap(m, 0, 0, 1))


def scaling(k):
    """``z -> k z``."""
    return MoebiusMap(k, 0, 0, 1)


def translation(b):
    return MoebiusMap(1, b, 0, 1)


def same_map(M1, M2, tol=1e-9):
    """Projective equality of two determinant-1 matrices (up to sign)."""
    a = (M1.p, M1.q, M1.r, M1.s)
    b = (M2.p, M2.q, M2.r, M2.s)
    scale = max(max(abs(x) for x in a), max(abs(x) for x in b))
    plus = max(abs(x - y) for x, y in zip(a, b))
    minus = max(abs(x + y) for x, y in zip(a, b))
    return float(min(plus, minus) / scale) <= tol
