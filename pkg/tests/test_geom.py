import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bulging import geom
from bulging.errors import DegenerateTriangle
from bulging.geom import (
    Kind,
    Point2,
    Triangle,
    classify_triangle,
    interior_angles,
    normalize,
    side_lengths,
)

SQRT3 = math.sqrt(3)


def test_point_rejects_non_finite():
    with pytest.raises(ValueError):
        Point2(float("nan"), 0.0)
    with pytest.raises(ValueError):
        Point2(0.0, float("inf"))


class TestNormalize:
    def test_ccw_input_unchanged(self):
        t = normalize(Point2(0, 0), Point2(1, 0), Point2(0.5, SQRT3 / 2))
        assert t.vertices == (Point2(0, 0), Point2(1, 0), Point2(0.5, SQRT3 / 2))

    def test_cw_input_swapped(self):
        t = normalize(Point2(0, 0), Point2(0.5, SQRT3 / 2), Point2(1, 0))
        assert t.vertices == (Point2(0, 0), Point2(1, 0), Point2(0.5, SQRT3 / 2))

    def test_collinear_rejected(self):
        with pytest.raises(DegenerateTriangle):
            normalize(Point2(0, 0), Point2(1, 0), Point2(2, 0))

    def test_nearly_collinear_rejected_relative_to_scale(self):
        # The threshold is relative, so huge triangles behave like unit ones.
        with pytest.raises(DegenerateTriangle):
            normalize(Point2(0, 0), Point2(1e8, 0), Point2(2e8, 1e-8))

    def test_idempotent(self):
        t = normalize(Point2(0, 0), Point2(0.5, SQRT3 / 2), Point2(1, 0))
        again = normalize(*t.vertices)
        assert again == t

    def test_direct_cw_construction_rejected(self):
        with pytest.raises(ValueError):
            Triangle(Point2(0, 0), Point2(0.5, SQRT3 / 2), Point2(1, 0))


class TestSideLengths:
    def test_equilateral(self, equilateral):
        s = side_lengths(equilateral)
        assert s.a == pytest.approx(1) and s.b == pytest.approx(1) and s.c == pytest.approx(1)

    def test_30_60_90(self, tri_30_60_90):
        s = side_lengths(tri_30_60_90)
        assert (s.a, s.b, s.c) == pytest.approx((1, SQRT3, 2))

    def test_right_isosceles(self, right_isosceles):
        s = side_lengths(right_isosceles)
        assert (s.a, s.b, s.c) == pytest.approx((1, 1, math.sqrt(2)))


class TestInteriorAngles:
    def test_equilateral(self, equilateral):
        ang = interior_angles(equilateral)
        assert (ang.alpha, ang.beta, ang.gamma) == pytest.approx((math.pi / 3,) * 3)

    def test_30_60_90(self, tri_30_60_90):
        ang = interior_angles(tri_30_60_90)
        assert (ang.alpha, ang.beta, ang.gamma) == pytest.approx(
            (math.pi / 6, math.pi / 3, math.pi / 2)
        )

    def test_right_isosceles(self, right_isosceles):
        ang = interior_angles(right_isosceles)
        assert (ang.alpha, ang.beta, ang.gamma) == pytest.approx(
            (math.pi / 4, math.pi / 4, math.pi / 2)
        )


class TestClassify:
    def test_equilateral_acute(self, equilateral):
        cls = classify_triangle(equilateral)
        assert cls.kind is Kind.ACUTE and cls.vertex is None

    def test_right_at_c(self, right_isosceles):
        cls = classify_triangle(right_isosceles)
        assert cls.kind is Kind.RIGHT and cls.vertex == "C"

    def test_obtuse_at_c(self, obtuse_example):
        # Oracle: the angle at C from the law of cosines exceeds pi/2.
        t = obtuse_example
        ca = geom.dist(t.c, t.a)
        cb = geom.dist(t.c, t.b)
        ab = geom.dist(t.a, t.b)
        gamma = math.acos((ca * ca + cb * cb - ab * ab) / (2 * ca * cb))
        assert gamma > math.pi / 2
        cls = classify_triangle(t)
        assert cls.kind is Kind.OBTUSE and cls.vertex == "C"


def _random_triangle(rng):
    while True:
        pts = [Point2(rng.uniform(-5, 5), rng.uniform(-5, 5)) for _ in range(3)]
        try:
            return normalize(*pts)
        except DegenerateTriangle:
            continue


def test_angle_sum_and_law_of_sines():
    rng = random.Random(101)
    for _ in range(500):
        t = _random_triangle(rng)
        ang = interior_angles(t)
        assert ang.alpha + ang.beta + ang.gamma == pytest.approx(math.pi, abs=1e-12)
        for a in (ang.alpha, ang.beta, ang.gamma):
            assert 0 < a < math.pi
        s = side_lengths(t)
        ratios = (
            s.a / math.sin(ang.alpha),
            s.b / math.sin(ang.beta),
            s.c / math.sin(ang.gamma),
        )
        assert ratios[1] == pytest.approx(ratios[0], rel=1e-9)
        assert ratios[2] == pytest.approx(ratios[0], rel=1e-9)


@settings(max_examples=100, deadline=None)
@given(
    dx=st.floats(-100, 100),
    dy=st.floats(-100, 100),
    theta=st.floats(0, 2 * math.pi),
    k=st.floats(0.01, 100),
)
def test_similarity_invariance(dx, dy, theta, k):
    base = normalize(Point2(0.2, 0.1), Point2(2.3, 0.4), Point2(1.0, 1.7))

    def xf(p):
        x = k * (p.x * math.cos(theta) - p.y * math.sin(theta)) + dx
        y = k * (p.x * math.sin(theta) + p.y * math.cos(theta)) + dy
        return Point2(x, y)

    moved = normalize(*(xf(p) for p in base.vertices))
    a0, m0 = interior_angles(base), interior_angles(moved)
    assert m0.alpha == pytest.approx(a0.alpha, rel=1e-9, abs=1e-9)
    assert m0.beta == pytest.approx(a0.beta, rel=1e-9, abs=1e-9)
    assert classify_triangle(moved).kind is classify_triangle(base).kind
    s0, s1 = side_lengths(base), side_lengths(moved)
    assert s1.a == pytest.approx(k * s0.a, rel=1e-9)
    assert s1.b == pytest.approx(k * s0.b, rel=1e-9)
    assert s1.c == pytest.approx(k * s0.c, rel=1e-9)
