"""Brute-force verifiers, independent of the closed forms they check.

Polyline length, boundary sampling, point membership and Monte Carlo area
are implemented from first principles so that the analytic formulas in
`metrics` and `theorems` can be validated against them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .construct import ArcEdge, BulgingTriangle, Convexity
from .errors import ConcaveUnsupported
from .geom import Point2, dist, dot

#: Samples per Monte Carlo chunk; each chunk draws from its own
#: counter-keyed stream so results do not depend on chunking or threads.
_CHUNK = 1 << 16


@dataclass(frozen=True)
class SampleConfig:
    n: int
    seed: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")


def polyline_length(arc: ArcEdge, n: int) -> float:
    """Sum of chord lengths over n equal-angle subdivisions.

    Converges to radius * central_angle from below at O(1/n^2).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    sweep = arc.signed_sweep()
    angles = np.linspace(0.0, sweep, n + 1)
    u0x = arc.start.x - arc.center.x
    u0y = arc.start.y - arc.center.y
    ca, sa = np.cos(angles), np.sin(angles)
    xs = arc.center.x + u0x * ca - u0y * sa
    ys = arc.center.y + u0x * sa + u0y * ca
    return float(np.hypot(np.diff(xs), np.diff(ys)).sum())


def boundary_samples(bt: BulgingTriangle, n_per_arc: int) -> list[Point2]:
    """CCW-ordered boundary points, n_per_arc segments per arc, starting at
    vertex A exactly; shared arc endpoints appear once."""
    if n_per_arc < 2:
        raise ValueError("n_per_arc must be >= 2")
    pts: list[Point2] = []
    for arc in bt.arcs:
        pts.append(arc.start)
        for i in range(1, n_per_arc):
            pts.append(arc.point_at(i / n_per_arc))
    return pts


def point_in_bulging(bt: BulgingTriangle, p: Point2) -> bool:
    """Membership by the triangle-or-segment decomposition: inside the base
    triangle (inclusive), or inside an arc's circle strictly beyond its
    chord."""
    if bt.convexity is Convexity.CONCAVE:
        raise ConcaveUnsupported("membership is only defined for convex bulging triangles")
    t = bt.triangle
    s = max(dist(t.a, t.b), dist(t.b, t.c), dist(t.c, t.a))
    tol = 1e-12 * s * s
    va, vb, vc = t.a, t.b, t.c
    inside_tri = (
        _edge_side(va, vb, p) >= -tol
        and _edge_side(vb, vc, p) >= -tol
        and _edge_side(vc, va, p) >= -tol
    )
    if inside_tri:
        return True
    for arc in bt.arcs:
        if dist(p, arc.center) < arc.radius:
            chord_mid = Point2(
                (arc.start.x + arc.end.x) / 2.0, (arc.start.y + arc.end.y) / 2.0
            )
            if dot(p - chord_mid, arc.bulge_outward) > 0.0:
                return True
    return False


def _edge_side(p: Point2, q: Point2, r: Point2) -> float:
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def _contains_mask(bt: BulgingTriangle, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    t = bt.triangle
    s = max(dist(t.a, t.b), dist(t.b, t.c), dist(t.c, t.a))
    tol = 1e-12 * s * s
    mask = np.ones_like(xs, dtype=bool)
    for p, q in ((t.a, t.b), (t.b, t.c), (t.c, t.a)):
        mask &= (q.x - p.x) * (ys - p.y) - (q.y - p.y) * (xs - p.x) >= -tol
    for arc in bt.arcs:
        in_circle = (xs - arc.center.x) ** 2 + (ys - arc.center.y) ** 2 < arc.radius**2
        mx = (arc.start.x + arc.end.x) / 2.0
        my = (arc.start.y + arc.end.y) / 2.0
        beyond = (xs - mx) * arc.bulge_outward.x + (ys - my) * arc.bulge_outward.y > 0.0
        mask |= in_circle & beyond
    return mask


def bounding_box(bt: BulgingTriangle) -> tuple[float, float, float, float]:
    """Tight axis-aligned box (xmin, ymin, xmax, ymax) of the boundary."""
    xs: list[float] = []
    ys: list[float] = []
    for arc in bt.arcs:
        xs += [arc.start.x, arc.end.x]
        ys += [arc.start.y, arc.end.y]
        for ux, uy in ((1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)):
            extreme = Point2(
                arc.center.x + arc.radius * ux, arc.center.y + arc.radius * uy
            )
            frac = arc.fraction_of(extreme)
            if 0.0 <= frac <= 1.0:
                xs.append(extreme.x)
                ys.append(extreme.y)
    return (min(xs), min(ys), max(xs), max(ys))


def monte_carlo_area(bt: BulgingTriangle, cfg: SampleConfig) -> tuple[float, float]:
    """Rejection sampling over the bounding box.

    Returns (estimate, standard error).  Streams are keyed by
    (seed, chunk index) with a counter-based generator, so the result is
    bit-identical regardless of how chunks are scheduled.
    """
    if bt.convexity is Convexity.CONCAVE:
        raise ConcaveUnsupported("area sampling is only defined for convex inputs")
    xmin, ymin, xmax, ymax = bounding_box(bt)
    width, height = xmax - xmin, ymax - ymin
    box_area = width * height
    hits = 0
    for chunk_index, start in enumerate(range(0, cfg.n, _CHUNK)):
        m = min(_CHUNK, cfg.n - start)
        gen = np.random.Generator(np.random.Philox(key=[cfg.seed, chunk_index]))
        u = gen.random((2, m))
        xs = xmin + u[0] * width
        ys = ymin + u[1] * height
        hits += int(_contains_mask(bt, xs, ys).sum())
    p = hits / cfg.n
    estimate = box_area * p
    std_error = box_area * math.sqrt(p * (1.0 - p) / cfg.n)
    return estimate, std_error
