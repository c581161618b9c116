"""Seeded random triangle generators for the property suites and `verify`.

Angles are drawn with a 0.05 rad margin away from degeneracy so that the
instances stay well conditioned; placements use B at the origin and C on the
positive x axis, with a log-uniform scale.
"""

from __future__ import annotations

import math
import random

from .geom import Point2, Triangle, normalize

#: Margin (radians) kept between sampled angles and degenerate configurations.
MARGIN = 0.05


def _place(beta: float, gamma: float, scale: float) -> Triangle:
    # |BC| = scale; alpha = pi - beta - gamma; |AB| from the law of sines.
    alpha = math.pi - beta - gamma
    c = scale * math.sin(gamma) / math.sin(alpha)
    a_vertex = Point2(c * math.cos(beta), c * math.sin(beta))
    return normalize(a_vertex, Point2(0.0, 0.0), Point2(scale, 0.0))


def _scale(rng: random.Random) -> float:
    return 10.0 ** rng.uniform(-1.0, 1.0)


def random_acute(rng: random.Random) -> Triangle:
    half_pi = math.pi / 2.0
    while True:
        beta = rng.uniform(MARGIN, half_pi - MARGIN)
        gamma = rng.uniform(MARGIN, half_pi - MARGIN)
        if beta + gamma > half_pi + MARGIN:
            return _place(beta, gamma, _scale(rng))


def random_right(rng: random.Random) -> Triangle:
    """Right angle exactly at C: B(0,0), C(a,0), A(a,b)."""
    a, b = random_legs(rng)
    return normalize(Point2(a, b), Point2(0.0, 0.0), Point2(a, 0.0))


def random_obtuse(rng: random.Random) -> Triangle:
    # Obtuse at C, bounded away from right and from collapse.
    gamma = rng.uniform(math.pi / 2.0 + 2.0 * MARGIN, math.pi - 3.0 * MARGIN)
    beta = rng.uniform(MARGIN, math.pi - gamma - MARGIN)
    return _place(beta, gamma, _scale(rng))


def random_acute_or_right(rng: random.Random) -> Triangle:
    return random_right(rng) if rng.random() < 0.25 else random_acute(rng)


def random_legs(rng: random.Random) -> tuple[float, float]:
    """Leg pair with ratio bounded by tan of the angle margins."""
    beta = rng.uniform(MARGIN, math.pi / 2.0 - MARGIN)
    s = _scale(rng)
    return s, s * math.tan(beta)
