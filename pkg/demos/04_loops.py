"""The four loops, traced and certified sample by sample.

Each loop shifts one real part of the parameters by 1, so it returns to
the same monodromy group.  Along the way alpha or a multiplier makes one
turn while every sampled configuration stays Schottky.  Pass a sample
count as the first argument (default 32) and an output directory as the
second to also get the SVG traces.
"""

import sys
from pathlib import Path

from hgschottky.loops import LoopKind, trace_loop
from hgschottky.serialize import loop_report_to_dict
from hgschottky.svg import render_loop

n = int(sys.argv[1]) if len(sys.argv) > 1 else 32
out = Path(sys.argv[2]) if len(sys.argv) > 2 else None

for kind in LoopKind:
    report = trace_loop(kind, n=n)
    c = report.winding_center
    print(f"{kind.value:18s} verdict {report.verdict!s:5s} winding of alpha around {c:g}: "
          f"{report.winding_alpha:+.6f}  change of arg m: {report.delta_arg_multiplier:+.9f}"
          f"  min margin {report.min_margin:.3g}  closure {report.closure_residual:.1e}")
    if out is not None:
        svg = render_loop(loop_report_to_dict(report))
        (out / f"{kind.value}.svg").write_text(svg)
