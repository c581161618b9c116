"""Exception types raised across the package."""


class GeometryError(Exception):
    """Base class for all geometry errors."""


class DegenerateTriangle(GeometryError):
    """Input points are collinear (or too close to it) to form a triangle."""


class InvalidAngles(GeometryError):
    """Arc endpoint angles violate 0 < x, y and x + y < pi."""


class ConcaveUnsupported(GeometryError):
    """Operation is only defined for convex bulging triangles."""


class NotRightAngled(GeometryError):
    """Operation requires a right-angled base triangle."""


class NotIsosceles(GeometryError):
    """No pair of base angles is equal within tolerance."""


class BadLegs(GeometryError):
    """Leg lengths must be positive (and ordered where required)."""


class Inconclusive(GeometryError):
    """A sampling check landed inside the tolerance band between verdicts."""
