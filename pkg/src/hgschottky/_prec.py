"""Private arbitrary-precision context shared by the geometry kernel.

Strongly loxodromic generators (multipliers near 1e-17) pair disks whose
radii sit far below double precision once written as Hermitian triples, so
points, maps and disks carry ``mpc``/``mpf`` values from a context of their
own.  The global ``mpmath.mp`` context is never touched.
"""

import os

from mpmath.ctx_mp import MPContext

ctx = MPContext()
ctx.dps = 50

DEFAULT_DPS = 50

# HGSCHOTTKY_TOL overrides the certificate tolerance used when none is given.
DEFAULT_TOL = float(os.environ.get("HGSCHOTTKY_TOL", "1e-9"))


def mpc(z):
    if isinstance(z, ctx.mpc):
        return z
    return ctx.mpc(z)


def mpf(x):
    if isinstance(x, ctx.mpf):
        return x
    return ctx.mpf(x)


def workdps(n):
    return ctx.workdps(n)
