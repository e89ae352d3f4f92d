"""Deterministic SVG figures of disk configurations and loop traces.

The output depends only on the input numbers: elements are emitted in a
fixed order, coordinates are printed with six significant digits, and the
view box comes from the finite circle data.  Disks containing infinity are
drawn as the view rectangle minus the circle (even-odd fill); half-planes
are clipped to the rectangle.  Circles far below the view scale also get a
dashed marker ring so they stay visible.
"""

from .disk import GeneralizedDisk
from .sphere import SpherePoint

COLORS = {"D1": "#1f77b4", "D1p": "#aec7e8", "D2": "#d62728", "D2p": "#ff9896"}
MARKER_FRACTION = 0.006


class EmptyFigure(ValueError):
    pass


def _f(x):
    s = f"{x:.6g}"
    return "0" if s == "-0" else s


def _circle_data(X):
    return complex(X.center), float(X.radius)


def _bounds(disks, points, extra=()):
    xs, ys = [], []
    for X in disks:
        if X.A == 0:
            continue
        c, r = _circle_data(X)
        xs += [c.real - r, c.real + r]
        ys += [c.imag - r, c.imag + r]
    for z in list(points) + list(extra):
        xs.append(z.real)
        ys.append(z.imag)
    if not xs:
        raise EmptyFigure("nothing finite to draw")
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    w = max(x1 - x0, y1 - y0, 1e-12)
    pad = 0.08 * w
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
    half = w / 2 + pad
    return cx - half, cy - half, 2 * half


def _clip_half_plane(X, box):
    """Polygon of the half-plane ``X`` inside the square ``box``."""
    x0, y0, w = box
    poly = [complex(x0, y0), complex(x0 + w, y0), complex(x0 + w, y0 + w), complex(x0, y0 + w)]

    def value(z):
        return float(2 * (X.B.real * z.real + X.B.imag * z.imag) + X.D)

    out = []
    for i, p in enumerate(poly):
        q = poly[(i + 1) % len(poly)]
        vp, vq = value(p), value(q)
        if vp <= 0:
            out.append(p)
        if (vp < 0) != (vq < 0) and vp != vq:
            out.append(p + (q - p) * (vp / (vp - vq)))
    return out


class Figure:
    def __init__(self, box, size=600):
        self.box = box
        self.size = size
        self.items = []

    @property
    def unit(self):
        return self.box[2]

    def _xy(self, z):
        return _f(z.real), _f(-z.imag)

    def disk(self, X, name, color):
        if X.A > 0:
            c, r = _circle_data(X)
            x, y = self._xy(c)
            self.items.append(
                f'<circle class="disk" data-name="{name}" cx="{x}" cy="{y}" r="{_f(r)}" '
                f'fill="{color}" fill-opacity="0.45" stroke="{color}" stroke-width="{_f(self.unit / 400)}"/>'
            )
            if r < MARKER_FRACTION * self.unit:
                self.items.append(
                    f'<circle class="tiny-marker" data-name="{name}" cx="{x}" cy="{y}" '
                    f'r="{_f(2 * MARKER_FRACTION * self.unit)}" fill="none" stroke="{color}" '
                    f'stroke-dasharray="{_f(self.unit / 200)}" stroke-width="{_f(self.unit / 500)}"/>'
                )
        elif X.A < 0:
            c, r = _circle_data(X)
            x0, y0, w = self.box
            cx, cy = c.real, -c.imag
            rect = f"M{_f(x0)},{_f(-(y0 + w))}h{_f(w)}v{_f(w)}h{_f(-w)}z"
            circ = (f"M{_f(cx - r)},{_f(cy)}a{_f(r)},{_f(r)} 0 1,0 {_f(2 * r)},0"
                    f"a{_f(r)},{_f(r)} 0 1,0 {_f(-2 * r)},0z")
            self.items.append(
                f'<path class="disk" data-name="{name}" d="{rect}{circ}" fill-rule="evenodd" '
                f'fill="{color}" fill-opacity="0.35" stroke="{color}" stroke-width="{_f(self.unit / 400)}"/>'
            )
        else:
            pts = _clip_half_plane(X, self.box)
            d = " ".join(f"{_f(p.real)},{_f(-p.imag)}" for p in pts)
            self.items.append(
                f'<polygon class="disk" data-name="{name}" points="{d}" fill="{color}" fill-opacity="0.35"/>'
            )

    def circle_outline(self, X, name, color="#555555", dash=True):
        c, r = _circle_data(X)
        x, y = self._xy(c)
        extra = f' stroke-dasharray="{_f(self.unit / 150)}"' if dash else ""
        self.items.append(
            f'<circle class="outline" data-name="{name}" cx="{x}" cy="{y}" r="{_f(r)}" fill="none" '
            f'stroke="{color}" stroke-width="{_f(self.unit / 500)}"{extra}/>'
        )

    def point(self, z, name, cls="fixed-point", color="#000000", scale=1.0):
        x, y = self._xy(z)
        self.items.append(
            f'<circle class="{cls}" data-name="{name}" cx="{x}" cy="{y}" '
            f'r="{_f(scale * self.unit / 250)}" fill="{color}"/>'
        )

    def polyline(self, pts, name, color="#2ca02c", closed=True):
        pts = list(pts) + ([pts[0]] if closed and pts else [])
        d = " ".join(f"{_f(z.real)},{_f(-z.imag)}" for z in pts)
        self.items.append(
            f'<polyline class="trajectory" data-name="{name}" points="{d}" fill="none" '
            f'stroke="{color}" stroke-width="{_f(self.unit / 300)}"/>'
        )

    def text(self, z, s):
        x, y = self._xy(z)
        self.items.append(
            f'<text x="{x}" y="{y}" font-size="{_f(self.unit / 30)}" font-family="sans-serif">{s}</text>'
        )

    def group(self, inner, transform, name):
        self.items.append(f'<g class="{name}" transform="{transform}">')
        self.items.extend(inner.items)
        self.items.append("</g>")

    def render(self, title=None):
        x0, y0, w = self.box
        vb = f"{_f(x0)} {_f(-(y0 + w))} {_f(w)} {_f(w)}"
        head = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.size}" height="{self.size}" viewBox="{vb}">',
        ]
        if title:
            head.append(f"<title>{title}</title>")
        head.append(f'<rect class="background" x="{_f(x0)}" y="{_f(-(y0 + w))}" width="{_f(w)}" '
                    f'height="{_f(w)}" fill="#ffffff"/>')
        return "\n".join(head + self.items + ["</svg>"]) + "\n"


def _finite(points):
    out = []
    for p in points:
        if p is None:
            continue
        p = SpherePoint.of(p)
        if not p.is_infinity:
            out.append(complex(p.value))
    return out


def render_config(cfg, orbit=None, title=None, extra_outlines=()):
    """The four disks, the marked fixed points and an optional orbit scatter."""
    disks = cfg.disks
    marked = {k: getattr(cfg, k) for k in ("f1", "f1p", "f2", "f2p")}
    pts = _finite(marked.values())
    box = _bounds(list(disks.values()) + list(extra_outlines), pts)
    fig = Figure(box)
    for name in ("D1", "D1p", "D2", "D2p"):
        fig.disk(disks[name], name, COLORS[name])
    for i, X in enumerate(extra_outlines):
        fig.circle_outline(X, f"outline{i}")
    for name in ("f1", "f1p", "f2", "f2p"):
        p = marked[name]
        if p is not None and not SpherePoint.of(p).is_infinity:
            fig.point(complex(SpherePoint.of(p).value), name)
    if orbit:
        for i, z in enumerate(_finite(orbit)):
            fig.point(z, f"o{i}", cls="orbit", color="#7f7f7f", scale=0.35)
    return fig.render(title)


def render_loop(report, config_at_start=None):
    """Trajectory of alpha over the loop with the disks at ``t = 0``.

    ``report`` is the dict form of a loop report.  For the multiplier-gamma2
    loop, where ``alpha`` stays in the tiny disk ``disk(eps, r)``, an inset
    shows ``(alpha - eps)/r`` against the unit circle.
    """
    samples = report.get("samples") or []
    if not samples:
        raise EmptyFigure("report has no samples")
    alphas = [complex(*s["alpha"]) for s in samples]
    if config_at_start is None and "config" in samples[0]:
        from .serialize import config_from_dict
        config_at_start = config_from_dict(samples[0]["config"])
    disks = list(config_at_start.disks.values()) if config_at_start else []
    box = _bounds(disks, alphas, [0j, 1 + 0j])
    fig = Figure(box)
    if config_at_start is not None:
        for name, X in config_at_start.disks.items():
            fig.disk(X, name, COLORS[name])
    fig.polyline(alphas, "alpha")
    fig.point(0j, "0", cls="reference")
    fig.point(1 + 0j, "1", cls="reference")
    if report["kind"] == "multiplier-gamma2":
        eps, r = report["constants"]["eps"], report["constants"]["r"]
        x0, y0, w = box
        inner = Figure((-1.2, -1.2, 2.4))
        inner.circle_outline(GeneralizedDisk(1, 0, -1), "disk(eps, r)", dash=False)
        inner.polyline([(a - eps) / r for a in alphas], "alpha-inset", color="#9467bd")
        s = 0.3 * w / 2.4
        tx, ty = x0 + w - 0.3 * w / 2 - 0.02 * w, -(y0 + w) + 0.3 * w / 2 + 0.02 * w
        fig.group(inner, f"translate({_f(tx)},{_f(ty)}) scale({_f(s)})", "inset")
    return fig.render(f"{report['kind']}: trajectory of alpha")
