"""Planar primitives: points, triangles, side lengths, angles, classification.

All values are immutable and all functions are pure.  Triangles are kept in
counter-clockwise orientation; `normalize` is the only place orientation is
fixed up, everything downstream assumes CCW.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateTriangle

#: Relative area threshold below which three points count as collinear.
EPS_AREA = 1e-12
#: Angle tolerance (radians) separating acute / right / obtuse.
EPS_ANGLE = 1e-9


@dataclass(frozen=True)
class Point2:
    """A point in the Euclidean plane."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates: ({self.x}, {self.y})")

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.x + other.x, self.y + other.y)

    def scaled(self, k: float) -> "Point2":
        return Point2(self.x * k, self.y * k)

    def norm(self) -> float:
        return math.hypot(self.x, self.y)


def cross(u: Point2, v: Point2) -> float:
    return u.x * v.y - u.y * v.x


def dot(u: Point2, v: Point2) -> float:
    return u.x * v.x + u.y * v.y


def dist(p: Point2, q: Point2) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def midpoint(p: Point2, q: Point2) -> Point2:
    return Point2((p.x + q.x) / 2.0, (p.y + q.y) / 2.0)


def unit(v: Point2) -> Point2:
    n = v.norm()
    if n == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return Point2(v.x / n, v.y / n)


@dataclass(frozen=True)
class Triangle:
    """Three non-collinear vertices in counter-clockwise order."""

    a: Point2
    b: Point2
    c: Point2

    def __post_init__(self):
        area2 = cross(self.b - self.a, self.c - self.a)
        s = max(dist(self.a, self.b), dist(self.b, self.c), dist(self.c, self.a))
        if abs(area2) <= EPS_AREA * s * s:
            raise DegenerateTriangle(
                f"collinear vertices: {self.a}, {self.b}, {self.c}"
            )
        if area2 < 0.0:
            raise ValueError("vertices must be in CCW order; use normalize()")

    @property
    def vertices(self) -> tuple[Point2, Point2, Point2]:
        return (self.a, self.b, self.c)

    def area(self) -> float:
        return cross(self.b - self.a, self.c - self.a) / 2.0


def normalize(p1: Point2, p2: Point2, p3: Point2) -> Triangle:
    """Build a CCW Triangle, swapping the last two points if input is CW.

    Raises DegenerateTriangle for collinear input.
    """
    area2 = cross(p2 - p1, p3 - p1)
    s = max(dist(p1, p2), dist(p2, p3), dist(p3, p1))
    if abs(area2) <= EPS_AREA * s * s:
        raise DegenerateTriangle(f"collinear vertices: {p1}, {p2}, {p3}")
    if area2 < 0.0:
        p2, p3 = p3, p2
    return Triangle(p1, p2, p3)


@dataclass(frozen=True)
class SideLengths:
    """Side lengths, named after the opposite vertex: a=|BC|, b=|CA|, c=|AB|."""

    a: float
    b: float
    c: float


@dataclass(frozen=True)
class TriangleAngles:
    """Interior angles in radians: alpha at A, beta at B, gamma at C."""

    alpha: float
    beta: float
    gamma: float

    def at(self, label: str) -> float:
        return {"A": self.alpha, "B": self.beta, "C": self.gamma}[label]


class Kind(Enum):
    ACUTE = "acute"
    RIGHT = "right"
    OBTUSE = "obtuse"


@dataclass(frozen=True)
class TriangleClass:
    """Acute/right/obtuse verdict; `vertex` names the extreme corner for
    right and obtuse triangles and is None for acute ones."""

    kind: Kind
    vertex: str | None = None


def side_lengths(t: Triangle) -> SideLengths:
    return SideLengths(
        a=dist(t.b, t.c),
        b=dist(t.c, t.a),
        c=dist(t.a, t.b),
    )


def _vertex_angle(v: Point2, p: Point2, q: Point2) -> float:
    # Two-argument arctangent of the edge vectors; well conditioned near pi/2.
    u, w = p - v, q - v
    return math.atan2(abs(cross(u, w)), dot(u, w))


def interior_angles(t: Triangle) -> TriangleAngles:
    return TriangleAngles(
        alpha=_vertex_angle(t.a, t.b, t.c),
        beta=_vertex_angle(t.b, t.c, t.a),
        gamma=_vertex_angle(t.c, t.a, t.b),
    )


def classify_triangle(t: Triangle) -> TriangleClass:
    ang = interior_angles(t)
    label, biggest = max(
        (("A", ang.alpha), ("B", ang.beta), ("C", ang.gamma)), key=lambda kv: kv[1]
    )
    half_pi = math.pi / 2.0
    if abs(biggest - half_pi) <= EPS_ANGLE:
        return TriangleClass(Kind.RIGHT, label)
    if biggest > half_pi:
        return TriangleClass(Kind.OBTUSE, label)
    return TriangleClass(Kind.ACUTE, None)
