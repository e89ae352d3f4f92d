"""Gamma function and the monodromy data of the hypergeometric equation E(a, b, c).

Circuit matrices act on the row of solutions ``(u1, u2)`` from the right;
``u1`` is holomorphic at ``x = 0`` and ``u2`` is ``x^(1-c)`` times a
holomorphic function.  They become Moebius maps of ``z = u1/u2`` through
:meth:`MoebiusMap.from_right_action`.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ._prec import ctx, mpc
from .sphere import MoebiusMap, conjugate, scaling

# Lanczos approximation, g = 7, n = 9
_LANCZOS_G = 7
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2 * math.pi)

POLE_GUARD = 1e-8


class PoleAtNonpositiveInteger(ValueError):
    """Gamma evaluated at (or within the guard radius of) 0, -1, -2, ..."""

    def __init__(self, z, name=None):
        self.z = z
        self.name = name
        what = f"{name} = {z}" if name else f"{z}"
        super().__init__(f"Gamma pole: {what} is a non-positive integer")


GammaPole = PoleAtNonpositiveInteger


class SinePole(ValueError):
    pass


class DegenerateNormalization(ValueError):
    pass


def _near_pole(z):
    n = round(z.real)
    return n <= 0 and abs(z - n) < POLE_GUARD


def complex_gamma(z):
    """Gamma function of a complex argument.

    Lanczos sum for ``Re z >= 1/2`` evaluated in log form, reflection
    ``Gamma(z) Gamma(1-z) = pi / sin(pi z)`` below that.
    """
    z = complex(z)
    if _near_pole(z):
        raise PoleAtNonpositiveInteger(z)
    if z.real < 0.5:
        return math.pi / (cmath.sin(math.pi * z) * complex_gamma(1 - z))
    z -= 1
    x = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        x += _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return cmath.exp(_HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x))


def _gamma(z, name):
    try:
        return complex_gamma(z)
    except PoleAtNonpositiveInteger:
        raise PoleAtNonpositiveInteger(z, name) from None


@dataclass(frozen=True)
class HGParams:
    """Parameters ``(a, b, c)`` of E(a, b, c) and its exponent differences."""

    a: complex
    b: complex
    c: complex

    def __post_init__(self):
        for name in "abc":
            object.__setattr__(self, name, complex(getattr(self, name)))

    @property
    def lam(self):
        """Exponent difference at ``x = 0``: ``1 - c``."""
        return 1 - self.c

    @property
    def mu(self):
        """Exponent difference at ``x = 1``: ``c - a - b``."""
        return self.c - self.a - self.b

    @property
    def nu(self):
        """Exponent difference at infinity: ``b - a``."""
        return self.b - self.a

    @classmethod
    def from_thetas(cls, theta0, theta1, theta2):
        """Pure-imaginary exponent differences ``(i th0, i th1, i th2)``."""
        a = 0.5 - 0.5j * (theta0 + theta1 + theta2)
        b = 0.5 - 0.5j * (theta0 + theta1 - theta2)
        c = 1 - 1j * theta0
        return cls(a, b, c)

    def swapped(self):
        """Parameters of the equation after ``x -> 1 - x``: ``c -> a + b + 1 - c``."""
        return HGParams(self.a, self.b, self.a + self.b + 1 - self.c)

    def check_nondegenerate(self):
        a, b, c = self.a, self.b, self.c
        for name, z in (("a", a), ("b", b), ("c-a", c - a), ("c-b", c - b), ("c", c), ("2-c", 2 - c)):
            if _near_pole(z):
                raise PoleAtNonpositiveInteger(z, name)
        return self


@dataclass(frozen=True)
class AngleTriple:
    theta0: float
    theta1: float
    theta2: float

    def __post_init__(self):
        if min(self.theta0, self.theta1, self.theta2) <= 0:
            raise ValueError("angles must be positive")

    @property
    def epsilon(self):
        return math.exp(-math.pi * self.theta0)

    def params(self):
        return HGParams.from_thetas(self.theta0, self.theta1, self.theta2)


def connection_matrix(p):
    """Connection matrix ``P`` (complex 2x2 array) of the ``x = 1`` circuit."""
    a, b, c = p.a, p.b, p.c
    G = _gamma
    P11 = G(c, "c") * G(c - a - b, "c-a-b") / (G(c - a, "c-a") * G(c - b, "c-b"))
    P12 = G(2 - c, "2-c") * G(c - a - b, "c-a-b") / (G(1 - a, "1-a") * G(1 - b, "1-b"))
    P21 = G(c, "c") * G(a + b - c, "a+b-c") / (G(a, "a") * G(b, "b"))
    P22 = G(2 - c, "2-c") * G(a + b - c, "a+b-c") / (G(a - c + 1, "a-c+1") * G(b - c + 1, "b-c+1"))
    return np.array([[P11, P12], [P21, P22]], dtype=complex)


def _diag_sl2(exponent):
    """Determinant-one multiple of ``diag(1, exp(2 pi i exponent))`` in working precision."""
    h = ctx.exp(ctx.pi * 1j * mpc(exponent))
    return ((1 / h, mpc(0)), (mpc(0), h))


def _matmul(X, Y):
    return tuple(
        tuple(sum(X[i][k] * Y[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


def _mp_gamma(z, name):
    z = mpc(z)
    if _near_pole(complex(z)):
        raise PoleAtNonpositiveInteger(complex(z), name)
    return ctx.gamma(z)


def connection_matrix_mp(p):
    """``P`` in working precision, as nested tuples of mp numbers.

    Used to build the generators: a multiplier near 1e-17 pairs disks of
    radius near 1e-9, whose position needs more than double-precision Gamma
    values.
    """
    a, b, c = (mpc(x) for x in (p.a, p.b, p.c))
    G = _mp_gamma
    P11 = G(c, "c") * G(c - a - b, "c-a-b") / (G(c - a, "c-a") * G(c - b, "c-b"))
    P12 = G(2 - c, "2-c") * G(c - a - b, "c-a-b") / (G(1 - a, "1-a") * G(1 - b, "1-b"))
    P21 = G(c, "c") * G(a + b - c, "a+b-c") / (G(a, "a") * G(b, "b"))
    P22 = G(2 - c, "2-c") * G(a + b - c, "a+b-c") / (G(a - c + 1, "a-c+1") * G(b - c + 1, "b-c+1"))
    return ((P11, P12), (P21, P22))


def circuit_matrices(p):
    """Moebius maps ``(gamma1, gamma2)`` of the circuits around ``x = 0`` and ``x = 1``.

    ``gamma1 = diag(1, e^{2 pi i (1-c)})`` and
    ``gamma2 = P^-1 diag(1, e^{2 pi i (c-a-b)}) P``, both taken with the
    determinant-one diagonal so that a multiplier near 1e-17 is not lost in
    rounding, and assembled in working precision.
    """
    Pm = connection_matrix_mp(p)
    det = Pm[0][0] * Pm[1][1] - Pm[0][1] * Pm[1][0]
    Pinv = ((Pm[1][1] / det, -Pm[0][1] / det), (-Pm[1][0] / det, Pm[0][0] / det))
    g1 = MoebiusMap.from_right_action(_diag_sl2(p.lam))
    g2 = MoebiusMap.from_right_action(_matmul(_matmul(Pinv, _diag_sl2(p.mu)), Pm))
    return g1, g2


def gamma2_fixed_points(p):
    """Fixed points ``(f2, f2')`` of ``gamma2`` from their Gamma-ratio expressions."""
    a, b, c = p.a, p.b, p.c
    G = _gamma
    f2 = G(c, "c") * G(a - c + 1, "a-c+1") * G(b - c + 1, "b-c+1") / (G(2 - c, "2-c") * G(a, "a") * G(b, "b"))
    f2p = G(c, "c") * G(1 - a, "1-a") * G(1 - b, "1-b") / (G(2 - c, "2-c") * G(c - a, "c-a") * G(c - b, "c-b"))
    return f2, f2p


def g_function(x, c):
    """``sin(pi c - pi x) / sin(pi x)``."""
    x, c = complex(x), complex(c)
    den = cmath.sin(math.pi * x)
    if abs(x - round(x.real)) < POLE_GUARD:
        raise SinePole(f"sin(pi x) vanishes at x = {x}")
    return cmath.sin(math.pi * c - math.pi * x) / den


def g_function_mp(x, c):
    """:func:`g_function` in working precision."""
    x, c = mpc(x), mpc(c)
    den = ctx.sinpi(x)
    if den == 0:
        raise SinePole(f"sin(pi x) vanishes at x = {complex(x)}")
    return ctx.sinpi(c - x) / den


def g_function_exp(x, c):
    """The same function for ``c = 1 - i th0`` written as ``eps + (1/eps - eps)/(1 - e^{2 pi i x})``."""
    x, c = complex(x), complex(c)
    eps = cmath.exp(1j * math.pi * (1 - c))  # e^{-pi th0} when 1 - c = i th0
    e = cmath.exp(2j * math.pi * x)
    if abs(1 - e) == 0:
        raise SinePole(f"sin(pi x) vanishes at x = {x}")
    return eps + (1 / eps - eps) / (1 - e)


def normalized_alpha(p):
    """``alpha = g(a) g(b)``: the second fixed point of gamma2 once ``f2`` is moved to 1."""
    return g_function(p.a, p.c) * g_function(p.b, p.c)


def normalize_generators(p, tol=1e-12):
    """Circuit matrices conjugated by ``z -> z/f2``.

    gamma1 keeps the fixed points ``{0, inf}``; gamma2 fixes ``1`` and
    ``alpha``.  Multipliers are unchanged by the conjugation.
    """
    p.check_nondegenerate()
    g1, g2 = circuit_matrices(p)
    a, b, c = (mpc(x) for x in (p.a, p.b, p.c))
    G = _mp_gamma
    f2 = G(c, "c") * G(a - c + 1, "a-c+1") * G(b - c + 1, "b-c+1") / (G(2 - c, "2-c") * G(a, "a") * G(b, "b"))
    if abs(f2) < tol:
        raise DegenerateNormalization(f"f2 = {complex(f2)} cannot be moved to 1")
    S = scaling(1 / f2)
    return conjugate(S, g1), conjugate(S, g2)
