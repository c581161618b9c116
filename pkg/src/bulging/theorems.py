"""Executable forms of the inequality and identity claims.

For a right angle at C with legs a = |BC| <= b = |CA| and t = arctan(b/a),
the round sides have closed forms

    |~AB| = (a^2 + b^2) / b * t
    |~BC| = sqrt(a^2 + b^2) * (pi/2 - t)
    |~CA| = sqrt(a^2 + b^2) * t

and the Pythagorean gap (|~BC|^2 + |~CA|^2) - |~AB|^2 factors as
(a^2 + b^2) * F(t) with the downward-open threshold parabola

    F(t) = (b^2 - a^2) / b^2 * t^2 - pi t + pi^2 / 4,

whose unique root on [pi/4, pi/2) is theta_0 = pi b / (2 (a + b)).  Since
t >= theta_0 with equality only at a = b, the gap is never positive: for
unequal legs the hypotenuse edge squared strictly exceeds the sum of the
other two squares.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import geom, metrics
from .construct import BulgingTriangle, Convexity
from .errors import BadLegs, ConcaveUnsupported, NotIsosceles

#: Relative tolerance for angle ties, matching geom.EPS_ANGLE.
_EPS = geom.EPS_ANGLE


class Verdict(Enum):
    SUM_DOMINATES = "sum_dominates"
    EQUAL = "equal"
    HYPOTENUSE_DOMINATES = "hypotenuse_dominates"


class Branch(Enum):
    LOWER = "lower"  # t <= theta_0, gap >= 0
    UPPER = "upper"  # t > theta_0, gap < 0


@dataclass(frozen=True)
class PythReport:
    a: float
    b: float
    t: float
    theta0: float
    gap: float
    verdict: Verdict


def _check_legs(a: float, b: float) -> None:
    if not (a > 0.0 and b > 0.0 and math.isfinite(a) and math.isfinite(b)):
        raise BadLegs(f"legs must be positive and finite, got ({a}, {b})")


def theta_zero(a: float, b: float) -> float:
    """Threshold angle pi*b / (2*(a+b)) for legs 0 < a <= b."""
    _check_legs(a, b)
    if a > b:
        raise BadLegs(f"need a <= b, got ({a}, {b})")
    return math.pi * b / (2.0 * (a + b))


def gap_profile(t: float, a: float, b: float) -> float:
    """The normalized gap parabola F(t); its sign is the gap's sign."""
    return (b * b - a * a) / (b * b) * t * t - math.pi * t + math.pi**2 / 4.0


def right_edge_lengths(a: float, b: float) -> tuple[float, float, float]:
    """Closed-form round-side lengths (AB, BC, CA) for the right triangle
    B(0,0), C(a,0), A(a,b).  Valid for any positive legs."""
    _check_legs(a, b)
    hyp2 = a * a + b * b
    hyp = math.sqrt(hyp2)
    t = math.atan2(b, a)  # angle at B
    m = min(t, math.pi / 2.0 - t)  # smaller endpoint angle of edge AB
    len_ab = hyp * (math.pi - 2.0 * m) / (2.0 * math.cos(m))
    len_bc = hyp * (math.pi / 2.0 - t)
    len_ca = hyp * t
    return (len_ab, len_bc, len_ca)


def pyth_gap(a: float, b: float) -> PythReport:
    """Gap (|~BC|^2 + |~CA|^2) - |~AB|^2, computed two independent ways.

    Legs are normalized so a <= b (swapping legs leaves the gap invariant).
    The parabola form (a^2+b^2)*F(t) and the direct closed-form edge
    lengths must agree to 1e-9 of the instance scale.
    """
    _check_legs(a, b)
    if a > b:
        a, b = b, a
    hyp2 = a * a + b * b
    t = math.atan2(b, a)
    theta0 = theta_zero(a, b)
    gap = hyp2 * gap_profile(t, a, b)

    len_ab, len_bc, len_ca = right_edge_lengths(a, b)
    gap_direct = (len_bc * len_bc + len_ca * len_ca) - len_ab * len_ab
    scale = hyp2 * math.pi**2 / 4.0
    if abs(gap - gap_direct) > 1e-9 * scale:
        raise AssertionError(
            f"gap paths disagree: parabola {gap} vs edge lengths {gap_direct}"
        )

    band = 1e-9 * hyp2
    if abs(gap) <= band:
        verdict = Verdict.EQUAL
    elif gap > 0.0:
        verdict = Verdict.SUM_DOMINATES
    else:
        verdict = Verdict.HYPOTENUSE_DOMINATES
    return PythReport(a=a, b=b, t=t, theta0=theta0, gap=gap, verdict=verdict)


def pyth_classify(a: float, b: float) -> Branch:
    """Which side of theta_0 the angle t = arctan(b/a) falls on.

    Because t >= theta_0 always (equality at a = b), the lower branch is the
    boundary case only.
    """
    _check_legs(a, b)
    if a > b:
        raise BadLegs(f"need a <= b, got ({a}, {b})")
    t = math.atan2(b, a)
    return Branch.UPPER if t > theta_zero(a, b) else Branch.LOWER


def check_triangle_inequality(bt: BulgingTriangle) -> tuple[bool, float]:
    """Each round side vs. the sum of the other two; margin is the smallest
    cyclic difference (positive means the inequality holds strictly)."""
    if bt.convexity is Convexity.CONCAVE:
        raise ConcaveUnsupported("triangle inequality is checked for convex inputs")
    lab, lbc, lca = metrics.edge_lengths(bt)
    margin = min(lbc + lca - lab, lca + lab - lbc, lab + lbc - lca)
    return margin > 0.0, margin


_OPPOSITE_EDGE = {"A": "BC", "B": "CA", "C": "AB"}


@dataclass(frozen=True)
class OrderingCase:
    smaller_angle_vertex: str
    larger_angle_vertex: str
    holds: bool


@dataclass(frozen=True)
class EdgeOrderingReport:
    """Angle ordering vs. round-side ordering.

    `cases` holds every applicable instance of: angle(Y) < angle(Z) <= pi/2
    implies the round side opposite Y is shorter than the one opposite Z.
    `converse_cases` covers the partial converse, applicable when the
    minimum angle sits at a third vertex: a longer opposite round side
    implies a larger angle.
    """

    lengths: tuple[tuple[str, float], ...]
    cases: tuple[OrderingCase, ...]
    consistent: bool
    converse_cases: tuple[OrderingCase, ...]
    converse_consistent: bool


def edge_ordering_check(bt: BulgingTriangle) -> EdgeOrderingReport:
    angles = geom.interior_angles(bt.triangle)
    lab, lbc, lca = metrics.edge_lengths(bt)
    length_of = {"AB": lab, "BC": lbc, "CA": lca}
    half_pi = math.pi / 2.0

    cases = []
    for y in "ABC":
        for z in "ABC":
            if y == z:
                continue
            ay, az = angles.at(y), angles.at(z)
            if ay < az - _EPS and az <= half_pi + _EPS:
                holds = length_of[_OPPOSITE_EDGE[y]] < length_of[_OPPOSITE_EDGE[z]]
                cases.append(OrderingCase(y, z, holds))

    min_vertex = min("ABC", key=angles.at)
    strictly_min = all(
        angles.at(min_vertex) < angles.at(v) - _EPS for v in "ABC" if v != min_vertex
    )
    converse_cases = []
    if strictly_min:
        others = [v for v in "ABC" if v != min_vertex]
        for y in others:
            for z in others:
                if y == z:
                    continue
                if length_of[_OPPOSITE_EDGE[z]] > length_of[_OPPOSITE_EDGE[y]]:
                    converse_cases.append(
                        OrderingCase(y, z, angles.at(z) > angles.at(y))
                    )

    lengths = tuple(sorted(length_of.items(), key=lambda kv: kv[1]))
    return EdgeOrderingReport(
        lengths=lengths,
        cases=tuple(cases),
        consistent=all(c.holds for c in cases),
        converse_cases=tuple(converse_cases),
        converse_consistent=all(c.holds for c in converse_cases),
    )


def isoceles_edge_equality(bt: BulgingTriangle) -> tuple[bool, float]:
    """Equal base angles must give equal round sides.

    Returns (equal, delta) where delta is the worst length difference over
    every equal-angle vertex pair; raises NotIsosceles when no pair of
    angles ties within tolerance.
    """
    angles = geom.interior_angles(bt.triangle)
    lab, lbc, lca = metrics.edge_lengths(bt)
    length_of = {"AB": lab, "BC": lbc, "CA": lca}
    perimeter = lab + lbc + lca

    delta = None
    for x, y in (("A", "B"), ("B", "C"), ("C", "A")):
        if abs(angles.at(x) - angles.at(y)) <= _EPS:
            d = abs(length_of[_OPPOSITE_EDGE[x]] - length_of[_OPPOSITE_EDGE[y]])
            delta = d if delta is None else max(delta, d)
    if delta is None:
        raise NotIsosceles("no pair of base angles is equal within tolerance")
    return delta <= 1e-9 * perimeter, delta
