"""Bulging triangles: Reuleaux-style arc triangles over arbitrary bases.

Each side of a base triangle is replaced by a circular arc through the same
two vertices, centered where the side's perpendicular bisector meets the
longer of the other two sides.  The package builds these figures, measures
them in closed form, renders them as SVG, and verifies every closed form
against independent brute-force oracles.
"""

__version__ = "0.1.0"

from .construct import ArcEdge, BulgingTriangle, Convexity, Edge, EdgeCenter, build
from .geom import (
    Kind,
    Point2,
    SideLengths,
    Triangle,
    TriangleAngles,
    TriangleClass,
    classify_triangle,
    interior_angles,
    normalize,
    side_lengths,
)

__all__ = [
    "ArcEdge",
    "BulgingTriangle",
    "Convexity",
    "Edge",
    "EdgeCenter",
    "Kind",
    "Point2",
    "SideLengths",
    "Triangle",
    "TriangleAngles",
    "TriangleClass",
    "build",
    "classify_triangle",
    "interior_angles",
    "normalize",
    "side_lengths",
    "__version__",
]
