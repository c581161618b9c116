"""Standalone SVG figures of bulging triangles.

The boundary is a single closed path made of three circular-arc commands;
optional overlay groups add the base triangle, the arc centers, the
perpendicular bisectors, the hypotenuse circumcircle and vertex labels.
Output is byte-deterministic: fixed field order and 9-significant-digit
decimals.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import geom, metrics, oracles
from .construct import BulgingTriangle, Edge
from .errors import NotRightAngled
from .geom import Kind, Point2, midpoint

#: Overlay tokens accepted by RenderOptions.
OVERLAYS = ("base", "centers", "bisectors", "circumcircle", "labels")


@dataclass(frozen=True)
class RenderOptions:
    width_px: int = 640
    height_px: int = 640
    margin_frac: float = 0.08
    overlays: frozenset = field(default_factory=frozenset)
    stroke: str = "#1b3a5b"
    fill: str = "#cfe4f7"
    stroke_width: float = 2.0

    def __post_init__(self):
        if not (0.0 <= self.margin_frac < 0.4):
            raise ValueError("margin_frac must be in [0, 0.4)")
        unknown = set(self.overlays) - set(OVERLAYS)
        if unknown:
            raise ValueError(f"unknown overlays: {sorted(unknown)}")


def _fmt(x: float) -> str:
    s = f"{x:.9g}"
    return "0" if s == "-0" else s


class _Viewport:
    """Maps geometry coordinates into the pixel viewport, y axis flipped."""

    def __init__(self, bbox, opts: RenderOptions):
        xmin, ymin, xmax, ymax = bbox
        pad_x = opts.margin_frac * opts.width_px
        pad_y = opts.margin_frac * opts.height_px
        bw = max(xmax - xmin, 1e-300)
        bh = max(ymax - ymin, 1e-300)
        self.scale = min((opts.width_px - 2 * pad_x) / bw, (opts.height_px - 2 * pad_y) / bh)
        # Center the drawing in the viewport.
        self.ox = (opts.width_px - self.scale * (xmin + xmax)) / 2.0
        self.oy = (opts.height_px + self.scale * (ymin + ymax)) / 2.0

    def map(self, p: Point2) -> tuple[float, float]:
        return (self.ox + self.scale * p.x, self.oy - self.scale * p.y)


def _path_d(bt: BulgingTriangle, vp: _Viewport) -> str:
    x0, y0 = vp.map(bt.arc_ab.start)
    parts = [f"M {_fmt(x0)} {_fmt(y0)}"]
    for arc in bt.arcs:
        r = _fmt(arc.radius * vp.scale)
        # The y flip reverses orientation: a positive sweep in geometry
        # coordinates is a negative-angle arc in SVG coordinates.
        sweep_flag = 0 if arc.signed_sweep() > 0 else 1
        ex, ey = vp.map(arc.end)
        parts.append(f"A {r} {r} 0 0 {sweep_flag} {_fmt(ex)} {_fmt(ey)}")
    parts.append("Z")
    return " ".join(parts)


def _circle(vp: _Viewport, center: Point2, radius: float, attrs: str) -> str:
    cx, cy = vp.map(center)
    return (
        f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(radius * vp.scale)}" {attrs}/>'
    )


def _line(vp: _Viewport, p: Point2, q: Point2, attrs: str) -> str:
    x1, y1 = vp.map(p)
    x2, y2 = vp.map(q)
    return (
        f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" {attrs}/>'
    )


def to_svg(bt: BulgingTriangle, opts: RenderOptions | None = None) -> str:
    opts = opts or RenderOptions()
    bbox = oracles.bounding_box(bt)
    circum = None
    if "circumcircle" in opts.overlays:
        cls = geom.classify_triangle(bt.triangle)
        if cls.kind is not Kind.RIGHT:
            raise NotRightAngled("circumcircle overlay requires a right base triangle")
        circum = metrics.circumdisk_gap(bt)
        bbox = (
            min(bbox[0], circum.center.x - circum.radius),
            min(bbox[1], circum.center.y - circum.radius),
            max(bbox[2], circum.center.x + circum.radius),
            max(bbox[3], circum.center.y + circum.radius),
        )
    vp = _Viewport(bbox, opts)

    thin = f'stroke="{opts.stroke}" stroke-width="{_fmt(opts.stroke_width / 2.0)}" fill="none"'
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{opts.width_px}" height="{opts.height_px}" '
        f'viewBox="0 0 {opts.width_px} {opts.height_px}">',
        f'<path d="{_path_d(bt, vp)}" fill="{opts.fill}" '
        f'stroke="{opts.stroke}" stroke-width="{_fmt(opts.stroke_width)}"/>',
    ]

    t = bt.triangle
    if "base" in opts.overlays:
        pts = " ".join(
            f"{_fmt(x)},{_fmt(y)}" for x, y in (vp.map(v) for v in t.vertices)
        )
        lines.append(
            f'<g id="base"><polygon points="{pts}" {thin} '
            'stroke-dasharray="4 3"/></g>'
        )
    if "centers" in opts.overlays:
        dots = "".join(
            _circle(vp, arc.center, 3.0 / vp.scale, f'fill="{opts.stroke}"')
            for arc in bt.arcs
        )
        lines.append(f'<g id="centers">{dots}</g>')
    if "bisectors" in opts.overlays:
        segs = "".join(
            _line(vp, midpoint(arc.start, arc.end), arc.center, thin)
            for arc in bt.arcs
        )
        lines.append(f'<g id="bisectors">{segs}</g>')
    if circum is not None:
        lines.append(
            f'<g id="circumcircle">{_circle(vp, circum.center, circum.radius, thin)}</g>'
        )
    if "labels" in opts.overlays:
        centroid = Point2(
            (t.a.x + t.b.x + t.c.x) / 3.0, (t.a.y + t.b.y + t.c.y) / 3.0
        )
        texts = []
        for name, v in zip("ABC", t.vertices):
            pos = v + geom.unit(v - centroid).scaled(18.0 / vp.scale)
            x, y = vp.map(pos)
            texts.append(
                f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="16" '
                f'text-anchor="middle" fill="{opts.stroke}">{name}</text>'
            )
        lines.append(f'<g id="labels">{"".join(texts)}</g>')

    lines.append("</svg>")
    return "\n".join(lines) + "\n"
