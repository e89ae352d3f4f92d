"""Schottky monodromy groups of the hypergeometric equation E(a, b, c).

Moebius maps and closed disks on the Riemann sphere, the monodromy data of
E(a, b, c), concentric centers and Apollonius families of disk pairs,
numerical Schottky certificates, and the four deformation loops of genus-2
Schottky monodromy groups.
"""

__version__ = "0.1.0"

from .sphere import MoebiusMap, SpherePoint, INF, ZERO, chordal, classify
from .disk import GeneralizedDisk, from_center_radius, outside, half_plane, disjoint, same_circle
from .special import HGParams, AngleTriple, complex_gamma, connection_matrix, circuit_matrices
from .special import gamma2_fixed_points, g_function, normalized_alpha, normalize_generators
from .apollonius import concentric_centers, apollonius_family, pairing_map
from .schottky import SchottkyConfig, Certificate, certify, check_nesting, orbit_sample
from .loops import LoopKind, LoopProfile, audit_profile, default_profile, trace_loop, base_point

__all__ = [
    "MoebiusMap", "SpherePoint", "INF", "ZERO", "chordal", "classify",
    "GeneralizedDisk", "from_center_radius", "outside", "half_plane", "disjoint", "same_circle",
    "HGParams", "AngleTriple", "complex_gamma", "connection_matrix", "circuit_matrices",
    "gamma2_fixed_points", "g_function", "normalized_alpha", "normalize_generators",
    "concentric_centers", "apollonius_family", "pairing_map",
    "SchottkyConfig", "Certificate", "certify", "check_nesting", "orbit_sample",
    "LoopKind", "LoopProfile", "audit_profile", "default_profile", "trace_loop", "base_point",
]
