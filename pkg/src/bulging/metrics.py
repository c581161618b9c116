"""Closed-form measurements of a bulging triangle.

Edge lengths are radius * central angle.  The area is the base triangle plus
the three circular segments r^2 (phi - sin phi) / 2, which is only valid when
the figure is convex (the segments attach disjointly).  For right-angled base
triangles the whole figure fits in the disk over the hypotenuse; that bound
is checked in closed form per arc.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import geom, oracles
from .construct import ArcEdge, BulgingTriangle, Convexity, Edge
from .errors import ConcaveUnsupported, Inconclusive, NotRightAngled
from .geom import Kind, Point2, cross, dist, midpoint, unit


@dataclass(frozen=True)
class CircumdiskReport:
    center: Point2
    radius: float
    max_boundary_distance: float

    @property
    def contained(self) -> bool:
        return self.max_boundary_distance <= self.radius * (1.0 + 2e-9)


@dataclass(frozen=True)
class MetricsReport:
    len_ab: float
    len_bc: float
    len_ca: float
    perimeter: float
    area: float | None
    convexity: Convexity
    circumdisk: CircumdiskReport | None


def edge_length(arc: ArcEdge) -> float:
    return arc.radius * arc.central_angle


def edge_lengths(bt: BulgingTriangle) -> tuple[float, float, float]:
    """Lengths of the round sides in order (AB, BC, CA)."""
    return (edge_length(bt.arc_ab), edge_length(bt.arc_bc), edge_length(bt.arc_ca))


def area(bt: BulgingTriangle) -> float:
    """Base triangle area plus the three circular segments."""
    if bt.convexity is Convexity.CONCAVE:
        raise ConcaveUnsupported("area is only defined for convex bulging triangles")
    total = bt.triangle.area()
    for arc in bt.arcs:
        phi = arc.central_angle
        total += arc.radius**2 * (phi - math.sin(phi)) / 2.0
    return total


_HYPOTENUSE = {"C": Edge.AB, "A": Edge.BC, "B": Edge.CA}


def _arc_max_distance(arc: ArcEdge, m: Point2) -> float:
    """Max distance from m to any point of the arc, in closed form.

    Candidates: the two endpoints, plus the circle point farthest from m
    (antipode along the ray m -> center) when it lies on the arc.
    """
    best = max(dist(arc.start, m), dist(arc.end, m))
    offset = dist(arc.center, m)
    if offset <= 1e-12 * arc.radius:
        # The arc lies on a circle centered at m itself.
        return max(best, arc.radius)
    far = arc.center + unit(arc.center - m).scaled(arc.radius)
    if 0.0 <= arc.fraction_of(far) <= 1.0:
        best = max(best, offset + arc.radius)
    return best


def circumdisk_gap(bt: BulgingTriangle) -> CircumdiskReport:
    """Disk over the hypotenuse of a right base triangle vs. the boundary.

    The disk is centered at the hypotenuse midpoint with radius half the
    hypotenuse; the report carries the maximum boundary distance from that
    center so containment is a single comparison.
    """
    cls = geom.classify_triangle(bt.triangle)
    if cls.kind is not Kind.RIGHT:
        raise NotRightAngled(f"base triangle is {cls.kind.value}")
    hyp = bt.arc(_HYPOTENUSE[cls.vertex])
    center = midpoint(hyp.start, hyp.end)
    radius = dist(hyp.start, hyp.end) / 2.0
    max_dist = max(_arc_max_distance(arc, center) for arc in bt.arcs)
    return CircumdiskReport(center=center, radius=radius, max_boundary_distance=max_dist)


def convexity_check(bt: BulgingTriangle, n: int) -> Convexity:
    """Verify the stored convexity flag by sampling the boundary and testing
    the sign of every consecutive turning cross product."""
    if n < 3:
        raise ValueError("need at least 3 samples per arc")
    pts = oracles.boundary_samples(bt, n)
    t = bt.triangle
    s = max(dist(t.a, t.b), dist(t.b, t.c), dist(t.c, t.a))
    s2 = s * s
    worst = math.inf
    count = len(pts)
    for i in range(count):
        p0 = pts[i]
        p1 = pts[(i + 1) % count]
        p2 = pts[(i + 2) % count]
        worst = min(worst, cross(p1 - p0, p2 - p1))
    if worst >= -1e-9 * s2:
        return Convexity.CONVEX
    if worst < -1e-6 * s2:
        return Convexity.CONCAVE
    raise Inconclusive(f"minimum turning cross {worst} inside tolerance band")


def report(bt: BulgingTriangle) -> MetricsReport:
    lab, lbc, lca = edge_lengths(bt)
    convex = bt.convexity is Convexity.CONVEX
    cls = geom.classify_triangle(bt.triangle)
    return MetricsReport(
        len_ab=lab,
        len_bc=lbc,
        len_ca=lca,
        perimeter=lab + lbc + lca,
        area=area(bt) if convex else None,
        convexity=bt.convexity,
        circumdisk=circumdisk_gap(bt) if cls.kind is Kind.RIGHT else None,
    )
