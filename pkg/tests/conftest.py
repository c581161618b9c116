import math

import pytest

from bulging.geom import Point2, normalize


@pytest.fixture
def equilateral():
    return normalize(Point2(0, 0), Point2(1, 0), Point2(0.5, math.sqrt(3) / 2))


@pytest.fixture
def right_isosceles():
    # B(0,0), C(1,0), A(1,1): right angle at C, legs 1.
    return normalize(Point2(1, 1), Point2(0, 0), Point2(1, 0))


@pytest.fixture
def tri_30_60_90():
    # B(0,0), C(1,0), A(1,sqrt(3)): angles pi/6 at A, pi/3 at B, pi/2 at C.
    return normalize(Point2(1, math.sqrt(3)), Point2(0, 0), Point2(1, 0))


@pytest.fixture
def obtuse_example():
    return normalize(Point2(1.8, 0.3), Point2(0, 0), Point2(1, 0))
