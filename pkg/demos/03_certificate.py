"""A certified genus-2 Schottky configuration and its ping-pong dynamics.

Writes base_point.json and base_point.svg to the directory given on the
command line (default: the current one).
"""

import sys
from pathlib import Path

from hgschottky.loops import base_point
from hgschottky.schottky import certify, check_nesting, orbit_sample, separating_circle_check
from hgschottky.serialize import config_to_dict, write_json
from hgschottky.svg import render_config

out = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
cfg = base_point(0.2, 6.0, 5.0)
cert = certify(cfg)
print(f"verdict {cert.verdict}, smallest disjointness margin {cert.min_margin:.4f}")
for k, v in sorted(cert.margins.items()):
    print(f"  {k:8s} {v:.4f}")

rep = check_nesting(cfg, 5)
print(f"nesting to depth 5: {rep.points_checked} orbit points, ok = {rep.ok}")
found, C, partition = separating_circle_check(cfg)
print(f"separating circle found: {found} {partition if found else ''}")

write_json(config_to_dict(cfg, note="theta = (0.2, 6, 5)"), out / "base_point.json")
(out / "base_point.svg").write_text(render_config(cfg, orbit_sample(cfg, 3), title="theta = (0.2, 6, 5)"))
print(f"wrote {out / 'base_point.json'} and {out / 'base_point.svg'}")
