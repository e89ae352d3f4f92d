"""Monodromy of E(a, b, c) for pure-imaginary exponent differences.

Builds the circuit matrices, checks the Gamma-ratio fixed points of gamma2
against its eigenvectors, and moves to the coordinate where gamma1 fixes
0 and infinity and gamma2 fixes 1 and alpha = g(a) g(b).
"""

import cmath
import math

from hgschottky.special import (
    HGParams, circuit_matrices, gamma2_fixed_points, normalize_generators, normalized_alpha,
)
from hgschottky.sphere import INF, SpherePoint, fixed_points

theta0, theta1, theta2 = 0.2, 6.0, 5.0
p = HGParams.from_thetas(theta0, theta1, theta2)
print(f"a = {p.a:.4f}, b = {p.b:.4f}, c = {p.c:.4f}")

g1, g2 = circuit_matrices(p)
f2, f2p = gamma2_fixed_points(p)
e1, e2 = fixed_points(g2)
d = min(max(SpherePoint.of(f2).chordal(e1), SpherePoint.of(f2p).chordal(e2)),
        max(SpherePoint.of(f2).chordal(e2), SpherePoint.of(f2p).chordal(e1)))
print(f"fixed points of gamma2 from Gamma ratios agree with eigenvectors to {float(d):.1e}")

n1, n2 = normalize_generators(p)
alpha = normalized_alpha(p)
print(f"alpha = g(a) g(b) = {alpha:.12f}, f2'/f2 = {complex(f2p / f2):.12f}")
print(f"multiplier of gamma1 at inf  = {complex(n1.multiplier_at(INF)):.6g}"
      f"  (exp(2 pi i lam) = {cmath.exp(2j * math.pi * p.lam):.6g})")
print(f"multiplier of gamma2 at alpha = {complex(n2.multiplier_at(alpha)):.6g}"
      f"  (exp(2 pi i mu) = {cmath.exp(2j * math.pi * p.mu):.6g})")
