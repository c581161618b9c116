import math
import random

import pytest

from bulging import geom, sampling
from bulging.construct import Edge, Convexity, arc_params, build, edge_center
from bulging.errors import InvalidAngles
from bulging.geom import Point2, dist, dot, interior_angles, normalize

SQRT3 = math.sqrt(3)


class TestEdgeCenter:
    def test_equilateral_center_is_opposite_vertex(self, equilateral):
        ec = edge_center(equilateral, Edge.AB)
        assert ec.point == equilateral.c
        assert ec.host_side is None and ec.param is None

    def test_right_isosceles_ab_center_is_c(self, right_isosceles):
        ec = edge_center(right_isosceles, Edge.AB)
        assert ec.point == right_isosceles.c  # angles at A and B tie at pi/4

    def test_tall_right_triangle_ab_center(self):
        # B(0,0), C(1,0), A(1,2): bisector of AB meets x=1 at y=3/4.
        t = normalize(Point2(1, 2), Point2(0, 0), Point2(1, 0))
        ec = edge_center(t, Edge.AB)
        assert ec.point.x == pytest.approx(1.0, abs=1e-15)
        assert ec.point.y == pytest.approx(0.75, abs=1e-15)
        assert ec.host_side is Edge.CA
        assert 0.0 <= ec.param <= 1.0

    def test_center_equidistant_and_on_host(self):
        rng = random.Random(7)
        for _ in range(300):
            t = sampling.random_acute(rng)
            for edge in Edge:
                ec = edge_center(t, edge)
                lx, ly = edge.endpoints
                vx = {"A": t.a, "B": t.b, "C": t.c}
                d1, d2 = dist(ec.point, vx[lx]), dist(ec.point, vx[ly])
                chord = dist(vx[lx], vx[ly])
                assert abs(d1 - d2) <= 1e-9 * chord
                if ec.param is not None:
                    assert -1e-9 <= ec.param <= 1 + 1e-9

    def test_center_on_longer_remaining_side(self):
        rng = random.Random(8)
        for _ in range(300):
            t = sampling.random_acute(rng)
            sides = geom.side_lengths(t)
            length_of = {"BC": sides.a, "CA": sides.b, "AB": sides.c}
            for edge in Edge:
                ec = edge_center(t, edge)
                if ec.host_side is None:
                    continue
                other = [e for e in Edge if e is not edge and e is not ec.host_side][0]
                assert length_of[ec.host_side.value] >= length_of[other.value]


class TestArcParams:
    def test_reuleaux(self):
        r, phi = arc_params(1.0, math.pi / 3, math.pi / 3)
        assert r == pytest.approx(1.0, abs=1e-15)
        assert phi == pytest.approx(math.pi / 3, abs=1e-15)

    def test_30_60(self):
        r, phi = arc_params(2.0, math.pi / 6, math.pi / 3)
        assert r == pytest.approx(2 / SQRT3, abs=1e-15)
        assert phi == pytest.approx(2 * math.pi / 3, abs=1e-15)

    def test_isosceles_right_legs(self):
        r, phi = arc_params(math.sqrt(2), math.pi / 4, math.pi / 4)
        assert r == pytest.approx(1.0, abs=1e-15)
        assert phi == pytest.approx(math.pi / 2, abs=1e-15)

    @pytest.mark.parametrize(
        "x,y", [(0.0, 1.0), (1.0, 0.0), (-0.1, 1.0), (2.0, 2.0), (1.6, 1.6)]
    )
    def test_invalid_angles(self, x, y):
        with pytest.raises(InvalidAngles):
            arc_params(1.0, x, y)


class TestBuild:
    def test_reuleaux(self, equilateral):
        bt = build(equilateral)
        assert bt.convexity is Convexity.CONVEX
        opposite = {Edge.AB: equilateral.c, Edge.BC: equilateral.a, Edge.CA: equilateral.b}
        for edge in Edge:
            arc = bt.arc(edge)
            assert dist(arc.center, opposite[edge]) <= 1e-12
            assert arc.radius == pytest.approx(1.0, abs=1e-12)
            assert arc.central_angle == pytest.approx(math.pi / 3, abs=1e-12)

    def test_right_isosceles(self, right_isosceles):
        bt = build(right_isosceles)
        assert bt.convexity is Convexity.CONVEX
        assert bt.arc_ab.center == Point2(1, 0)
        assert bt.arc_ab.radius == pytest.approx(1.0, abs=1e-12)
        assert bt.arc_ab.central_angle == pytest.approx(math.pi / 2, abs=1e-12)
        for arc in (bt.arc_bc, bt.arc_ca):
            assert dist(arc.center, Point2(0.5, 0.5)) <= 1e-12
            assert arc.radius == pytest.approx(math.sqrt(2) / 2, abs=1e-12)
            assert arc.central_angle == pytest.approx(math.pi / 2, abs=1e-12)

    def test_obtuse_flagged_concave(self, obtuse_example):
        assert build(obtuse_example).convexity is Convexity.CONCAVE

    def test_arcs_share_vertices_exactly(self, tri_30_60_90):
        bt = build(tri_30_60_90)
        assert bt.arc_ab.end == bt.arc_bc.start
        assert bt.arc_bc.end == bt.arc_ca.start
        assert bt.arc_ca.end == bt.arc_ab.start
        assert bt.arc_ab.start == tri_30_60_90.a


class TestArcInvariants:
    @staticmethod
    def _check(bt):
        t = bt.triangle
        third = {0: t.c, 1: t.a, 2: t.b}
        for i, arc in enumerate(bt.arcs):
            assert abs(dist(arc.center, arc.start) - arc.radius) <= 1e-9 * arc.radius
            assert abs(dist(arc.center, arc.end) - arc.radius) <= 1e-9 * arc.radius
            assert 0 < arc.central_angle < math.pi
            chord = dist(arc.start, arc.end)
            assert chord == pytest.approx(
                2 * arc.radius * math.sin(arc.central_angle / 2), rel=1e-9
            )
            # Apex strictly beyond the chord, third vertex strictly behind it.
            mid = geom.midpoint(arc.start, arc.end)
            assert dot(arc.apex - mid, arc.bulge_outward) > 0
            assert dot(third[i] - mid, arc.bulge_outward) < 0
            assert arc.bulge_outward.norm() == pytest.approx(1.0, abs=1e-12)

    def test_on_random_instances(self):
        rng = random.Random(11)
        for _ in range(200):
            self._check(build(sampling.random_acute_or_right(rng)))
        for _ in range(100):
            self._check(build(sampling.random_obtuse(rng)))

    def test_base_angles_of_center_triangle(self):
        # Isosceles (X, Y, center) has both base angles equal to the smaller
        # endpoint angle.
        rng = random.Random(12)
        for _ in range(200):
            t = sampling.random_acute(rng)
            ang = interior_angles(t)
            bt = build(t)
            for edge in Edge:
                arc = bt.arc(edge)
                lx, ly = edge.endpoints
                m = min(ang.at(lx), ang.at(ly))
                for v, w in ((arc.start, arc.end), (arc.end, arc.start)):
                    u1, u2 = w - v, arc.center - v
                    base = math.atan2(abs(geom.cross(u1, u2)), dot(u1, u2))
                    assert base == pytest.approx(m, abs=1e-9)

    def test_right_angle_centers_coincide_at_hypotenuse_midpoint(self):
        rng = random.Random(13)
        for _ in range(200):
            t = sampling.random_right(rng)  # right angle at C
            bt = build(t)
            c_len = dist(t.a, t.b)
            mid_ab = geom.midpoint(t.a, t.b)
            assert dist(bt.arc_bc.center, mid_ab) <= 1e-9 * c_len
            assert dist(bt.arc_ca.center, mid_ab) <= 1e-9 * c_len
            assert bt.arc_bc.central_angle + bt.arc_ca.central_angle == pytest.approx(
                math.pi, abs=1e-9
            )

    def test_build_commutes_with_similarity(self):
        rng = random.Random(14)
        for _ in range(100):
            t = sampling.random_acute_or_right(rng)
            k = 10 ** rng.uniform(-1, 1)
            theta = rng.uniform(0, 2 * math.pi)
            dx, dy = rng.uniform(-10, 10), rng.uniform(-10, 10)

            def xf(p):
                return Point2(
                    k * (p.x * math.cos(theta) - p.y * math.sin(theta)) + dx,
                    k * (p.x * math.sin(theta) + p.y * math.cos(theta)) + dy,
                )

            moved = build(normalize(*(xf(p) for p in t.vertices)))
            original = build(t)
            for arc_m, arc_o in zip(moved.arcs, original.arcs):
                assert dist(arc_m.center, xf(arc_o.center)) <= 1e-9 * k * arc_o.radius
                assert arc_m.radius == pytest.approx(k * arc_o.radius, rel=1e-9)
                assert arc_m.central_angle == pytest.approx(
                    arc_o.central_angle, abs=1e-9
                )

    def test_isosceles_edge_gets_third_vertex_center(self):
        rng = random.Random(15)
        for _ in range(100):
            beta = rng.uniform(math.pi / 4 + 0.05, math.pi / 2 - 0.05)
            # Angles at B and C equal: isosceles over BC, apex at A.
            a_vertex = Point2(0.5, 0.5 * math.tan(beta))
            t = normalize(a_vertex, Point2(0, 0), Point2(1, 0))
            ec = edge_center(t, Edge.BC)
            assert ec.host_side is None
            assert ec.point == t.a
            arc = build(t).arc(Edge.BC)
            assert arc.radius == pytest.approx(dist(t.a, t.b), rel=1e-12)
