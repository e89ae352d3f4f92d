"""JSON forms of configurations, certificates, loop reports and run configs.

Summary numbers are plain JSON floats (``repr``, 17 significant digits, so
they re-parse exactly).  Disks and generator matrices are written as
decimal strings at the working precision: a disk of radius
1e-9 at ``z = 1`` has Hermitian triple ``(1, -1, 1 - 1e-18)``, which a
double cannot hold.  Complex numbers are ``[re, im]`` pairs; disks are
``{"A": a, "B": [re, im], "D": d}``.

Every writer emits ``json.dumps(..., indent=2, sort_keys=True)`` plus a
newline, so run configs and loop reports survive write -> read -> write
byte for byte.  A configuration read back is the same configuration (same
maps, same circles), though re-normalizing a determinant-one matrix with
entries near 1e8 moves its trailing digits.
"""

import json
from dataclasses import asdict, dataclass, fields

import jsonschema

from ._prec import ctx, mpc, mpf
from .disk import GeneralizedDisk
from .schottky import SchottkyConfig
from .sphere import MoebiusMap, SpherePoint


class InputError(ValueError):
    """Malformed or schema-violating input (exit code 2 on the command line)."""


# numbers --------------------------------------------------------------------------


def _mpstr(x):
    return ctx.nstr(mpf(x), ctx.dps)


def exact_complex(z):
    z = mpc(z)
    return [_mpstr(z.real), _mpstr(z.imag)]


def plain_complex(z):
    z = complex(z)
    return [z.real, z.imag]


def read_real(x):
    return mpf(x) if isinstance(x, str) else mpf(float(x))


def read_complex(pair):
    return ctx.mpc(read_real(pair[0]), read_real(pair[1]))


def encode_disk(X):
    return {"A": _mpstr(X.A), "B": exact_complex(X.B), "D": _mpstr(X.D)}


def decode_disk(d):
    return GeneralizedDisk(read_real(d["A"]), read_complex(d["B"]), read_real(d["D"]))


def encode_map(M):
    return [[exact_complex(M.p), exact_complex(M.q)], [exact_complex(M.r), exact_complex(M.s)]]


def decode_map(m):
    (p, q), (r, s) = m
    return MoebiusMap(read_complex(p), read_complex(q), read_complex(r), read_complex(s))


def encode_point(p):
    if p is None:
        return None
    p = SpherePoint.of(p)
    return "inf" if p.is_infinity else exact_complex(p.value)


def decode_point(v):
    if v is None:
        return None
    if v == "inf":
        return SpherePoint(1, 0)
    return SpherePoint.of(read_complex(v))


# schemas ------------------------------------------------------------------------------

_NUM = {"type": ["number", "string"]}
_COMPLEX = {"type": "array", "items": _NUM, "minItems": 2, "maxItems": 2}
_DISK = {
    "type": "object",
    "properties": {"A": _NUM, "B": _COMPLEX, "D": _NUM},
    "required": ["A", "B", "D"],
    "additionalProperties": False,
}
_MATRIX = {
    "type": "array", "minItems": 2, "maxItems": 2,
    "items": {"type": "array", "items": _COMPLEX, "minItems": 2, "maxItems": 2},
}
_POINT = {"anyOf": [{"const": "inf"}, _COMPLEX, {"type": "null"}]}

CONFIG_SCHEMA = {
    "type": "object",
    "properties": {
        "type": {"const": "schottky-config"},
        "gamma1": _MATRIX,
        "gamma2": _MATRIX,
        "disks": {
            "type": "object",
            "properties": {k: _DISK for k in ("D1", "D1p", "D2", "D2p")},
            "required": ["D1", "D1p", "D2", "D2p"],
            "additionalProperties": False,
        },
        "marked": {
            "type": "object",
            "properties": {k: _POINT for k in ("f1", "f1p", "f2", "f2p")},
            "additionalProperties": False,
        },
        "dps": {"type": "integer", "minimum": 15},
        "note": {"type": "string"},
    },
    "required": ["type", "gamma1", "gamma2", "disks"],
    "additionalProperties": False,
}

KINDS = ["alpha-around-d0", "alpha-around-d1", "multiplier-gamma2", "multiplier-gamma1"]
COMMANDS = ["monodromy", "certify", "loop", "plot", "apollonius", "audit"]

RUN_CONFIG_SCHEMA = {
    "type": "object",
    "properties": {
        "type": {"const": "run-config"},
        "command": {"enum": COMMANDS},
        "kind": {"enum": KINDS + [None]},
        "theta0": {"type": ["number", "null"]},
        "theta1": {"type": ["number", "null"]},
        "theta2": {"type": ["number", "null"]},
        "theta_prime": {"type": ["number", "null"]},
        "s": {"type": ["number", "null"]},
        "n": {"type": ["integer", "null"], "minimum": 16},
        "tol": {"type": ["number", "null"], "exclusiveMinimum": 0},
        "margin": {"type": ["number", "null"], "minimum": 0},
        "outer": {"enum": ["balanced", "tight", None]},
        "inputs": {"type": "array", "items": {"type": "string"}},
        "out": {"type": ["string", "null"]},
        "svg": {"type": ["string", "null"]},
        "seed": {"type": ["integer", "null"]},
    },
    "required": ["type", "command"],
    "additionalProperties": False,
}

LOOP_REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "type": {"const": "loop-report"},
        "kind": {"enum": KINDS},
        "verdict": {"type": "boolean"},
        "profile": {"type": "object"},
        "constants": {"type": "object"},
        "audit": {"type": "object"},
        "checks": {"type": "object", "additionalProperties": {"type": "boolean"}},
        "winding_alpha": {"type": "number"},
        "winding_center": _COMPLEX,
        "delta_arg_multiplier": {"type": "number"},
        "closure_residual": {"type": "number"},
        "min_margin": {"type": "number"},
        "notes": {"type": "array", "items": {"type": "string"}},
        "phi_psi": {"type": ["object", "null"]},
        "samples": {"type": "array", "items": {"type": "object"}},
        "refined": {"type": "array", "items": {"type": "object"}},
    },
    "required": ["type", "kind", "verdict", "checks", "samples"],
    "additionalProperties": False,
}


def validate(obj, schema):
    try:
        jsonschema.validate(obj, schema)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise InputError(f"{path}: {exc.message}") from None
    return obj


# configurations ------------------------------------------------------------------------


def config_to_dict(cfg, note=None):
    d = {
        "type": "schottky-config",
        "dps": ctx.dps,
        "gamma1": encode_map(cfg.gamma1),
        "gamma2": encode_map(cfg.gamma2),
        "disks": {k: encode_disk(v) for k, v in cfg.disks.items()},
        "marked": {k: encode_point(getattr(cfg, k)) for k in ("f1", "f1p", "f2", "f2p")},
    }
    if note:
        d["note"] = note
    return d


def config_from_dict(d):
    validate(d, CONFIG_SCHEMA)
    try:
        marked = d.get("marked", {})
        return SchottkyConfig(
            decode_map(d["gamma1"]), decode_map(d["gamma2"]),
            *(decode_disk(d["disks"][k]) for k in ("D1", "D1p", "D2", "D2p")),
            *(decode_point(marked.get(k)) for k in ("f1", "f1p", "f2", "f2p")),
        )
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"invalid configuration: {exc}") from None


def certificate_to_dict(cert):
    d = cert.to_dict()
    d["type"] = "certificate"
    return d


# run configs -----------------------------------------------------------------------------


@dataclass
class RunConfig:
    command: str
    kind: str = None
    theta0: float = None
    theta1: float = None
    theta2: float = None
    theta_prime: float = None
    s: float = None
    n: int = None
    tol: float = None
    margin: float = None
    outer: str = None
    inputs: list = None
    out: str = None
    svg: str = None
    seed: int = None

    def to_dict(self):
        d = {"type": "run-config"}
        d.update({k: v for k, v in asdict(self).items() if v is not None})
        return validate(d, RUN_CONFIG_SCHEMA)

    @classmethod
    def from_dict(cls, d):
        validate(d, RUN_CONFIG_SCHEMA)
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in d.items() if k in names})


# loop reports -------------------------------------------------------------------------------


def _sample_to_dict(s):
    return {
        "t": s.t,
        "a": plain_complex(s.params.a),
        "b": plain_complex(s.params.b),
        "c": plain_complex(s.params.c),
        "alpha": plain_complex(s.alpha),
        "multiplier_gamma1": plain_complex(s.m1),
        "multiplier_gamma2": plain_complex(s.m2),
        "verdict": s.certificate.verdict,
        "min_margin": s.certificate.min_margin,
        "config": config_to_dict(s.config),
    }


def loop_report_to_dict(report, include_configs=True):
    p = report.profile
    samples = [_sample_to_dict(s) for s in report.samples]
    refined = [_sample_to_dict(s) for s in report.refined]
    if not include_configs:
        for s in samples + refined:
            s.pop("config")
    return {
        "type": "loop-report",
        "kind": report.kind.value,
        "verdict": report.verdict,
        "profile": {k: (v.value if hasattr(v, "value") else v) for k, v in asdict(p).items()},
        "constants": dict(report.constants),
        "audit": report.audit.to_dict(),
        "checks": dict(report.checks),
        "winding_alpha": report.winding_alpha,
        "winding_center": plain_complex(report.winding_center),
        "delta_arg_multiplier": report.delta_arg_multiplier,
        "closure_residual": report.closure_residual,
        "min_margin": report.min_margin,
        "notes": list(report.notes),
        "phi_psi": None if report.phi_psi is None else asdict(report.phi_psi),
        "samples": samples,
        "refined": refined,
    }


def read_loop_report(d):
    return validate(d, LOOP_REPORT_SCHEMA)


# files ------------------------------------------------------------------------------------------


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True, allow_nan=False) + "\n"


def write_json(obj, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


def read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
