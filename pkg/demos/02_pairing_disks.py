"""Concentric centers of a disk pair and the circle of maps pairing them.

For two disjoint disks there is one point F in D (and F' in D') such that
sending F to infinity makes both boundary circles concentric.  Given a
fixed point f' inside D', the loxodromic maps carrying D onto the
complement of D' form a circle's worth, all with the same |m|.
"""

import math

from hgschottky.apollonius import (
    apollonius_family, concentric_centers, concentricity, pairing_map, point_on_circle,
)
from hgschottky.disk import circle_residual, complement, from_center_radius, map_disk

D, Dp = from_center_radius(0, 1), from_center_radius(5, 2)
pair = concentric_centers(D, Dp)
print(f"F  = {complex(pair.F.value):.10f}   eta  = {pair.eta:.10f} in {pair.interval}")
print(f"F' = {complex(pair.Fp.value):.10f}   eta' = {pair.eta_p:.10f} in {pair.interval_p}")
print(f"center offset after sending F to infinity: {concentricity(D, Dp, pair.F):.1e}")

data = apollonius_family(D, Dp, 5.3 + 0.4j)
print(f"\n|m| = {float(data.abs_m):.10f}; circle A: center {complex(data.circle.center):.6f},"
      f" radius {float(data.circle.radius):.6f}")
for k in range(4):
    phase = 2 * math.pi * k / 4
    g = pairing_map(data, phase=phase)
    f = complex(point_on_circle(data, phase).value)
    res = circle_residual(map_disk(g, D), complement(Dp))
    print(f"arg m = {phase:.3f}: f = {f:.6f}, |m| = {float(abs(g.multiplier)):.10f}, residual {res:.1e}")

# the symmetric case blows up: f' = F' leaves only the phase free
data = apollonius_family(D, Dp, pair.Fp)
print(f"\nf' = F': degenerate = {data.degenerate}, other fixed point is F for every phase")
