import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from chainhull.errors import EmptyInput, NonFiniteCoordinate
from chainhull.geometry import Orientation, Point2, as_points, orient, orient_many, signed_area

coords = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)
points = st.tuples(coords, coords)
int_points = st.tuples(st.integers(-1000, 1000), st.integers(-1000, 1000))


@pytest.mark.parametrize("a, b, p, expected", [
    ((0, 0), (1, 0), (0, 1), Orientation.LEFT),
    ((0, 0), (1, 0), (0.5, 0), Orientation.COLLINEAR),
    # 2*1 - 2*3 = -4
    ((0, 0), (2, 2), (3, 1), Orientation.RIGHT),
])
def test_orient_examples(a, b, p, expected):
    assert orient(a, b, p) is expected


@given(points, points, points)
def test_cyclic_symmetry_sign(a, b, p):
    # Exact for integer-valued data; on general floats only the sign of a
    # clearly non-zero determinant is stable, so compare via exact rationals.
    from fractions import Fraction as F

    def exact(a, b, p):
        v = (F(b[0]) - F(a[0])) * (F(p[1]) - F(a[1])) - (F(b[1]) - F(a[1])) * (F(p[0]) - F(a[0]))
        return (v > 0) - (v < 0)

    assert exact(a, b, p) == exact(b, p, a) == exact(p, a, b)


@given(int_points, int_points, int_points)
def test_cyclic_symmetry_integer(a, b, p):
    assert orient(a, b, p) == orient(b, p, a) == orient(p, a, b)


@given(int_points, int_points, int_points)
def test_swap_antisymmetry(a, b, p):
    assert (orient(a, b, p) == Orientation.LEFT) == (orient(b, a, p) == Orientation.RIGHT)
    assert orient(a, b, p) == -orient(b, a, p)


@given(int_points, int_points, int_points, int_points)
def test_translation_invariance(a, b, p, off):
    shift = lambda q: (q[0] + off[0], q[1] + off[1])  # noqa: E731
    assert orient(a, b, p) == orient(shift(a), shift(b), shift(p))


@given(points, points, st.lists(points, min_size=1, max_size=20))
def test_vectorised_matches_scalar(a, b, ps):
    arr = np.asarray(ps, dtype=float)
    got = orient_many(a, b, arr[:, 0], arr[:, 1])
    assert got.tolist() == [int(orient(a, b, p)) for p in ps]


def test_as_points_rejects_empty_and_non_finite():
    with pytest.raises(EmptyInput):
        as_points([])
    with pytest.raises(NonFiniteCoordinate):
        as_points([(0, 0), (math.nan, 1)])
    with pytest.raises(NonFiniteCoordinate):
        as_points([(math.inf, 1)])
    assert as_points([], allow_empty=True).shape == (0, 2)


def test_as_points_shape_check():
    with pytest.raises(ValueError):
        as_points([(1, 2, 3)])


def test_signed_area_ccw_positive():
    assert signed_area([(0, 0), (1, 0), (1, 1), (0, 1)]) == 1.0
    assert signed_area([(0, 0), (0, 1), (1, 1), (1, 0)]) == -1.0


def test_point2_is_a_tuple():
    p = Point2(1.0, 2.0)
    assert p == (1.0, 2.0) and p.x == 1.0 and p.y == 2.0
