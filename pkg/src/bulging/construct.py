"""Construction of the bulging triangle.

Each side XY of a base triangle is replaced by a circular arc through X and Y
whose center is the intersection of the perpendicular bisector of XY with the
longer of the two remaining sides.  The arc bulges away from the opposite
vertex.  An equilateral base reproduces the Reuleaux triangle (each center is
the opposite vertex).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import geom
from .errors import InvalidAngles
from .geom import Point2, Triangle, cross, dist, dot, midpoint, unit


class Edge(Enum):
    AB = "AB"
    BC = "BC"
    CA = "CA"

    @property
    def endpoints(self) -> tuple[str, str]:
        return (self.value[0], self.value[1])

    @property
    def third(self) -> str:
        return {"AB": "C", "BC": "A", "CA": "B"}[self.value]


class Convexity(Enum):
    CONVEX = "convex"
    CONCAVE = "concave"


def _vertex(t: Triangle, label: str) -> Point2:
    return {"A": t.a, "B": t.b, "C": t.c}[label]


def _edge_of(x: str, y: str) -> Edge:
    for e in Edge:
        if set(e.endpoints) == {x, y}:
            return e
    raise KeyError((x, y))


@dataclass(frozen=True)
class EdgeCenter:
    """Arc center for one side.

    `host_side` is the side of the base triangle the center lies on, or None
    when the perpendicular bisector passes through the opposite vertex (the
    isosceles tie case); `param` is the position along the host side from its
    first endpoint, None in the tie case.
    """

    point: Point2
    host_side: Edge | None
    param: float | None


@dataclass(frozen=True)
class ArcEdge:
    """One circular round side: an arc from `start` to `end` about `center`
    that bulges along `bulge_outward` (unit normal of the chord, pointing
    away from the triangle's third vertex)."""

    center: Point2
    radius: float
    start: Point2
    end: Point2
    central_angle: float
    bulge_outward: Point2

    def signed_sweep(self) -> float:
        """Signed rotation (radians) from start to end about the center.

        Magnitude equals the central angle; the arc is always the minor one,
        so the sign is unambiguous.
        """
        u0 = self.start - self.center
        u1 = self.end - self.center
        return math.atan2(cross(u0, u1), dot(u0, u1))

    def point_at(self, s: float) -> Point2:
        """Point at fraction s in [0, 1] along the arc from start to end."""
        ang = s * self.signed_sweep()
        u0 = self.start - self.center
        ca, sa = math.cos(ang), math.sin(ang)
        return Point2(
            self.center.x + u0.x * ca - u0.y * sa,
            self.center.y + u0.x * sa + u0.y * ca,
        )

    @property
    def apex(self) -> Point2:
        return self.point_at(0.5)

    def fraction_of(self, p: Point2) -> float:
        """Arc fraction whose direction from the center matches p's.

        Values in [0, 1] mean the direction lies within the arc's span.
        """
        sweep = self.signed_sweep()
        u0 = self.start - self.center
        up = p - self.center
        ang = math.atan2(cross(u0, up), dot(u0, up))
        # Bring the relative angle onto the same side as the sweep.
        if sweep > 0 and ang < 0:
            ang += 2 * math.pi
        elif sweep < 0 and ang > 0:
            ang -= 2 * math.pi
        return ang / sweep


@dataclass(frozen=True)
class BulgingTriangle:
    triangle: Triangle
    arc_ab: ArcEdge
    arc_bc: ArcEdge
    arc_ca: ArcEdge
    convexity: Convexity

    @property
    def arcs(self) -> tuple[ArcEdge, ArcEdge, ArcEdge]:
        return (self.arc_ab, self.arc_bc, self.arc_ca)

    def arc(self, edge: Edge) -> ArcEdge:
        return {Edge.AB: self.arc_ab, Edge.BC: self.arc_bc, Edge.CA: self.arc_ca}[edge]


def arc_params(chord_length: float, angle_x: float, angle_y: float) -> tuple[float, float]:
    """Radius and central angle of the arc over a chord whose endpoint
    angles (in the base triangle) are angle_x and angle_y.

    The arc center forms an isosceles triangle over the chord with base
    angles m = min(angle_x, angle_y), so the radius is chord / (2 cos m) and
    the central angle is pi - 2m.
    """
    if not (angle_x > 0.0 and angle_y > 0.0 and angle_x + angle_y < math.pi):
        raise InvalidAngles(
            f"need 0 < x, y and x + y < pi; got ({angle_x}, {angle_y})"
        )
    m = min(angle_x, angle_y)
    radius = chord_length / (2.0 * math.cos(m))
    return radius, math.pi - 2.0 * m


def edge_center(t: Triangle, edge: Edge) -> EdgeCenter:
    """Intersection of the edge's perpendicular bisector with the longer of
    the two remaining sides.

    When the endpoint angles tie (isosceles over this edge) the bisector
    passes through the opposite vertex, which is returned exactly.
    """
    angles = geom.interior_angles(t)
    lx, ly = edge.endpoints
    X, Y = _vertex(t, lx), _vertex(t, ly)
    Z = _vertex(t, edge.third)
    ax, ay = angles.at(lx), angles.at(ly)

    if abs(ax - ay) <= geom.EPS_ANGLE:
        return EdgeCenter(point=Z, host_side=None, param=None)

    # The center lies on the side joining the smaller-angle endpoint to the
    # opposite vertex (that side is the longer of the two candidates).
    small_label, S = (lx, X) if ax < ay else (ly, Y)
    host = _edge_of(small_label, edge.third)

    mid = midpoint(X, Y)
    chord = Y - X
    seg = Z - S
    denom = dot(seg, chord)
    u = dot(mid - S, chord) / denom
    point = S + seg.scaled(u)

    param = u if host.endpoints[0] == small_label else 1.0 - u
    return EdgeCenter(point=point, host_side=host, param=param)


def _build_arc(t: Triangle, edge: Edge, angles: geom.TriangleAngles) -> ArcEdge:
    lx, ly = edge.endpoints
    X, Y = _vertex(t, lx), _vertex(t, ly)
    Z = _vertex(t, edge.third)
    center = edge_center(t, edge).point
    radius = (dist(center, X) + dist(center, Y)) / 2.0
    central = math.pi - 2.0 * min(angles.at(lx), angles.at(ly))
    v = Y - X
    outward = unit(Point2(v.y, -v.x))  # CCW triangle: third vertex on the left
    # Flip if it ended up pointing toward the third vertex (defensive; the
    # CCW invariant should make this a no-op).
    if dot(outward, Z - X) > 0.0:
        outward = Point2(-outward.x, -outward.y)
    return ArcEdge(
        center=center,
        radius=radius,
        start=X,
        end=Y,
        central_angle=central,
        bulge_outward=outward,
    )


def build(t: Triangle) -> BulgingTriangle:
    """Assemble the three arcs and the convexity flag.

    Obtuse base triangles are allowed; the result is flagged Concave and most
    downstream checks refuse it.
    """
    angles = geom.interior_angles(t)
    kind = geom.classify_triangle(t).kind
    convexity = Convexity.CONCAVE if kind == geom.Kind.OBTUSE else Convexity.CONVEX
    return BulgingTriangle(
        triangle=t,
        arc_ab=_build_arc(t, Edge.AB, angles),
        arc_bc=_build_arc(t, Edge.BC, angles),
        arc_ca=_build_arc(t, Edge.CA, angles),
        convexity=convexity,
    )
