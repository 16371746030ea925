"""Planar points and the orientation predicate shared by every stage.

All orientation tests in the package, scalar and vectorised, evaluate the
same double-precision expression::

    (bx - ax) * (py - ay) - (by - ay) * (px - ax)

and treat an exact zero as collinear. Numpy and Python floats both perform
plain IEEE-754 binary64 operations here, so the two paths agree bit for bit.
"""

from __future__ import annotations

from enum import IntEnum
from typing import NamedTuple

import numpy as np

from .errors import EmptyInput, NonFiniteCoordinate


class Point2(NamedTuple):
    x: float
    y: float


class Orientation(IntEnum):
    RIGHT = -1
    COLLINEAR = 0
    LEFT = 1


def cross(ax, ay, bx, by, px, py):
    """Signed cross product of (b - a) and (p - a). Works on floats or arrays."""
    return (bx - ax) * (py - ay) - (by - ay) * (px - ax)


def orient(a, b, p) -> Orientation:
    """Which side of the directed line a->b the point p lies on."""
    c = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
    if c > 0.0:
        return Orientation.LEFT
    if c < 0.0:
        return Orientation.RIGHT
    return Orientation.COLLINEAR


def is_left(a, b, p) -> bool:
    return (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) > 0.0


def orient_many(a, b, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Vectorised ``orient`` of every (xs[i], ys[i]) against a->b, as int8 signs."""
    c = cross(a[0], a[1], b[0], b[1], xs, ys)
    return np.sign(c).astype(np.int8)


def as_points(points, *, allow_empty: bool = False) -> np.ndarray:
    """Coerce a sequence of (x, y) pairs into a C-contiguous ``(n, 2)`` float64 array.

    Raises EmptyInput for an empty input (unless ``allow_empty``) and
    NonFiniteCoordinate if any coordinate is NaN or infinite.
    """
    arr = np.asarray(points, dtype=np.float64)
    if arr.size == 0:
        if allow_empty:
            return np.empty((0, 2), dtype=np.float64)
        raise EmptyInput("no points given")
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected an (n, 2) array of points, got shape {arr.shape}")
    finite = np.isfinite(arr).all(axis=1)
    if not finite.all():
        bad = int(np.flatnonzero(~finite)[0])
        raise NonFiniteCoordinate(f"point {bad} has a non-finite coordinate: {tuple(arr[bad])}")
    return np.ascontiguousarray(arr)


def to_point_list(arr: np.ndarray) -> list[Point2]:
    return [Point2(x, y) for x, y in arr.tolist()]


def signed_area(ring) -> float:
    """Shoelace signed area of a closed ring; positive when counterclockwise."""
    n = len(ring)
    s = 0.0
    for i in range(n):
        x0, y0 = ring[i]
        x1, y1 = ring[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return s / 2.0
