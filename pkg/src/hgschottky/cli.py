"""Command-line entry: ``hgschottky <command> [options]``.

Exit codes: 0 pass, 1 mathematical failure (certificate, audit or loop
verdict), 2 usage or input error.  Reports go to ``--out`` (JSON) or to
standard output.  ``--config run.json`` loads a schema-checked run config
whose values fill in any option not given on the command line.
"""

import argparse
import random
import sys
from dataclasses import replace

from . import __version__
from ._prec import DEFAULT_TOL
from .apollonius import (
    apollonius_family, concentric_centers, concentricity, pairing_map,
)
from .disk import from_center_radius, map_disk, same_circle, complement
from .loops import (
    BranchJump, DiskConstructionFailed, LoopKind, ProfileNotAudited, audit_profile,
    default_profile, trace_loop,
)
from .schottky import DEFAULT_MARGIN, certify, orbit_sample
from .serialize import (
    InputError, RunConfig, certificate_to_dict, config_from_dict, dumps, encode_disk,
    exact_complex, loop_report_to_dict, plain_complex, read_json, read_loop_report, write_json,
)
from .special import (
    GammaPole, HGParams, SinePole, DegenerateNormalization, circuit_matrices, connection_matrix,
    gamma2_fixed_points, normalized_alpha,
)
from .sphere import INF, MoebiusMap, SpherePoint
from .svg import EmptyFigure, render_config, render_loop

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class UsageError(ValueError):
    pass


def _complex_arg(s):
    try:
        return complex(s.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {s!r}") from None


def _emit(obj, out):
    if out:
        write_json(obj, out)
    else:
        sys.stdout.write(dumps(obj))


def _matrix(M):
    return [[plain_complex(M.p), plain_complex(M.q)], [plain_complex(M.r), plain_complex(M.s)]]


# commands ----------------------------------------------------------------------------


def cmd_monodromy(args):
    if args.a is not None or args.b is not None or args.c is not None:
        if None in (args.a, args.b, args.c):
            raise UsageError("give all of --a --b --c, or the angles --theta0 --theta1 --theta2")
        p = HGParams(args.a, args.b, args.c)
    else:
        if None in (args.theta0, args.theta1, args.theta2):
            raise UsageError("give --a --b --c or --theta0 --theta1 --theta2")
        p = HGParams.from_thetas(args.theta0, args.theta1, args.theta2)
    p.check_nondegenerate()
    P = connection_matrix(p)
    g1, g2 = circuit_matrices(p)
    f2, f2p = gamma2_fixed_points(p)
    report = {
        "type": "monodromy",
        "a": plain_complex(p.a), "b": plain_complex(p.b), "c": plain_complex(p.c),
        "exponent_differences": {"lam": plain_complex(p.lam), "mu": plain_complex(p.mu),
                                 "nu": plain_complex(p.nu)},
        "P": [[plain_complex(P[i][j]) for j in range(2)] for i in range(2)],
        "gamma1": _matrix(g1),
        "gamma2": _matrix(g2),
        "f2": plain_complex(f2),
        "f2p": plain_complex(f2p),
        "alpha": plain_complex(normalized_alpha(p)),
        "multiplier_gamma1": plain_complex(g1.multiplier_at(INF)),
        "multiplier_gamma2": plain_complex(g2.multiplier_at(SpherePoint.of(f2p))),
    }
    _emit(report, args.out)
    return EXIT_PASS


def _random_moebius(rng):
    while True:
        vals = [complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(4)]
        p, q, r, s = vals
        if abs(p * s - q * r) > 0.1:
            return MoebiusMap(p, q, r, s)


def cmd_certify(args):
    if not args.inputs:
        raise UsageError("certify needs a configuration file")
    cfg = config_from_dict(read_json(args.inputs[0]))
    tol = DEFAULT_TOL if args.tol is None else args.tol
    margin = DEFAULT_MARGIN if args.margin is None else args.margin
    cert = certify(cfg, tol)
    out = certificate_to_dict(cert)
    out["required_margin"] = margin
    ok = cert.passes(margin)
    if args.conjugations:
        rng = random.Random(args.seed)
        verdicts = []
        for _ in range(args.conjugations):
            T = _random_moebius(rng)
            verdicts.append(certify(cfg.transported(T), tol).passes(margin))
        out["conjugation_verdicts"] = verdicts
        ok = ok and all(v == cert.passes(margin) for v in verdicts)
    out["pass"] = ok
    _emit(out, args.out)
    return EXIT_PASS if ok else EXIT_FAIL


def _profile_from_args(args):
    kind = LoopKind(args.kind or "alpha-around-d0")
    p = default_profile(kind)
    over = {}
    for name in ("theta0", "theta1", "theta2", "theta_prime", "s", "n", "tol", "margin", "outer"):
        v = getattr(args, name, None)
        if v is not None:
            over[name] = v
    if "theta_prime" in over and "s" not in over and kind is LoopKind.ALPHA_AROUND_D1:
        over["s"] = None
    return replace(p, **over)


def cmd_audit(args):
    audit = audit_profile(args.kind or "alpha-around-d0", _profile_from_args(args))
    _emit(audit.to_dict(), args.out)
    if not audit.ok:
        sys.stderr.write("audit failed: " + "; ".join(audit.failed()) + "\n")
    return EXIT_PASS if audit.ok else EXIT_FAIL


def cmd_loop(args):
    profile = _profile_from_args(args)
    try:
        report = trace_loop(profile.kind, profile)
    except ProfileNotAudited as exc:
        _emit({"type": "loop-report-error", "audit": exc.audit.to_dict()}, args.out)
        sys.stderr.write(f"{exc}\n")
        return EXIT_FAIL
    except (DiskConstructionFailed, BranchJump) as exc:
        sys.stderr.write(f"loop failed: {exc}\n")
        return EXIT_FAIL
    d = loop_report_to_dict(report)
    _emit(d, args.out)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_loop(d))
    summary = (f"{report.kind.value}: verdict {'pass' if report.verdict else 'fail'}, "
               f"winding {report.winding_alpha:.6f}, delta arg {report.delta_arg_multiplier:.9f}, "
               f"min margin {report.min_margin:.4g}")
    sys.stderr.write(summary + "\n")
    if not report.verdict:
        sys.stderr.write("failed checks: " + ", ".join(report.failed_checks()) + "\n")
    return EXIT_PASS if report.verdict else EXIT_FAIL


def cmd_plot(args):
    if not args.inputs:
        raise UsageError("plot needs a configuration or loop report file")
    d = read_json(args.inputs[0])
    kind = d.get("type") if isinstance(d, dict) else None
    if kind == "schottky-config":
        cfg = config_from_dict(d)
        orbit = orbit_sample(cfg, args.orbit_depth) if args.orbit_depth else None
        svg = render_config(cfg, orbit, title=d.get("note"))
    elif kind == "loop-report":
        svg = render_loop(read_loop_report(d))
    else:
        raise InputError("expected a schottky-config or loop-report file")
    out = args.svg or args.out
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_PASS


def cmd_apollonius(args):
    if args.disk is None or args.disk2 is None:
        raise UsageError("give --disk CX CY R and --disk2 CX CY R")
    D = from_center_radius(complex(args.disk[0], args.disk[1]), args.disk[2])
    Dp = from_center_radius(complex(args.disk2[0], args.disk2[1]), args.disk2[2])
    pair = concentric_centers(D, Dp)
    out = {
        "type": "apollonius",
        "F": exact_complex(pair.F.value),
        "Fp": exact_complex(pair.Fp.value),
        "eta": pair.eta, "eta_p": pair.eta_p,
        "interval": list(pair.interval), "interval_p": list(pair.interval_p),
        "concentricity": concentricity(D, Dp, pair.F),
    }
    if args.fp is not None:
        data = apollonius_family(D, Dp, args.fp)
        out["abs_m"] = float(data.abs_m)
        out["degenerate"] = data.degenerate
        out["circle"] = None if data.circle is None else encode_disk(data.circle)
        if args.phase is not None:
            g = pairing_map(data, phase=args.phase)
            out["map"] = _matrix(g)
            out["pairs"] = same_circle(map_disk(g, D), complement(Dp))
    _emit(out, args.out)
    return EXIT_PASS


COMMANDS = {
    "monodromy": cmd_monodromy,
    "certify": cmd_certify,
    "loop": cmd_loop,
    "plot": cmd_plot,
    "apollonius": cmd_apollonius,
    "audit": cmd_audit,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="run config (JSON) supplying defaults for the options")
    common.add_argument("--theta0", type=float)
    common.add_argument("--theta1", type=float)
    common.add_argument("--theta2", type=float)
    common.add_argument("--theta-prime", dest="theta_prime", type=float)
    common.add_argument("--s", type=float, help="the parameter s of the loop around D_1")
    common.add_argument("--n", type=int, help="number of samples on the loop (>= 16)")
    common.add_argument("--tol", type=float)
    common.add_argument("--margin", type=float)
    common.add_argument("--outer", choices=["balanced", "tight"],
                        help="outer disks of the multiplier loops")
    common.add_argument("--out", help="JSON output path")
    common.add_argument("--svg", help="SVG output path")
    common.add_argument("--seed", type=int)
    common.add_argument("--kind", choices=[k.value for k in LoopKind])

    parser = argparse.ArgumentParser(prog="hgschottky", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("monodromy", parents=[common], help="circuit matrices and fixed points")
    p.add_argument("--a", type=_complex_arg)
    p.add_argument("--b", type=_complex_arg)
    p.add_argument("--c", type=_complex_arg)

    p = sub.add_parser("certify", parents=[common], help="certify a Schottky configuration file")
    p.add_argument("inputs", nargs="*")
    p.add_argument("--conjugations", type=int, default=0,
                   help="also certify this many random Moebius conjugates (uses --seed)")

    sub.add_parser("loop", parents=[common], help="trace one of the four loops")
    sub.add_parser("audit", parents=[common], help="audit a loop profile")

    p = sub.add_parser("plot", parents=[common], help="SVG of a configuration or loop report")
    p.add_argument("inputs", nargs="*")
    p.add_argument("--orbit-depth", type=int, default=0)

    p = sub.add_parser("apollonius", parents=[common], help="concentric centers and pairing maps")
    p.add_argument("--disk", type=float, nargs=3, metavar=("CX", "CY", "R"))
    p.add_argument("--disk2", type=float, nargs=3, metavar=("CX", "CY", "R"))
    p.add_argument("--fp", type=_complex_arg, help="fixed point inside the second disk")
    p.add_argument("--phase", type=float, help="arg of the multiplier")
    return parser


def _merge_run_config(args):
    rc = RunConfig.from_dict(read_json(args.config))
    if rc.command != args.command:
        raise UsageError(f"run config is for {rc.command!r}, not {args.command!r}")
    for name, value in vars(rc).items():
        if name == "command" or value is None:
            continue
        if getattr(args, name, None) in (None, [], 0):
            setattr(args, name, value)
    return args


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    try:
        if args.config:
            args = _merge_run_config(args)
        if args.n is not None and args.n < 16:
            raise UsageError("--n must be at least 16")
        return COMMANDS[args.command](args)
    except (UsageError, InputError, EmptyFigure, GammaPole, SinePole, DegenerateNormalization) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
