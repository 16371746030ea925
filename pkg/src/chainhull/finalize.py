"""Chain assembly and Melkman's hull of a simple polygon."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateInput
from .geometry import Orientation, Point2, as_points, is_left, orient
from .preprocess import ExtremeQuad


@dataclass
class SimplePolygon:
    """Counterclockwise ring without a closing repeat."""

    vertices: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass
class Hull:
    """Strictly convex CCW ring starting at the lowest-x (then lowest-y) vertex."""

    vertices: list[Point2]

    def __len__(self) -> int:
        return len(self.vertices)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.vertices, dtype=np.float64).reshape(-1, 2)


def dedupe_ring(arr: np.ndarray) -> np.ndarray:
    """Drop consecutive repeated vertices, including across the wrap-around."""
    if len(arr) < 2:
        return arr
    same_as_prev = np.all(arr == np.roll(arr, 1, axis=0), axis=1)
    if same_as_prev.all():
        return arr[:1]
    return arr[~same_as_prev]


def assemble_polygon(chains, quad: ExtremeQuad) -> SimplePolygon:
    """Join the four region chains between their corner points, counterclockwise.

    ``chains`` may come in any order; they are matched to regions by their
    ``region`` field. Missing regions count as empty.
    """
    by_region = {chain.region: chain.kept for chain in chains}
    parts = []
    for region, corner in enumerate(quad, start=1):
        parts.append(np.asarray([corner], dtype=np.float64))
        kept = by_region.get(region)
        if kept is not None and len(kept):
            parts.append(np.asarray(kept, dtype=np.float64).reshape(-1, 2))
    ring = dedupe_ring(np.concatenate(parts))
    if len(np.unique(ring, axis=0)) < 3:
        raise DegenerateInput("fewer than three distinct polygon vertices")
    return SimplePolygon(ring)


def canonical_ring(ring: list) -> list[Point2]:
    start = min(range(len(ring)), key=ring.__getitem__)
    return [Point2(*p) for p in ring[start:] + ring[:start]]


def _drop_collinear(ring: list) -> list:
    n = len(ring)
    return [ring[i] for i in range(n) if is_left(ring[i - 1], ring[i], ring[(i + 1) % n])]


def melkman(polygon) -> Hull:
    """Convex hull of a simple polygon (or simple polyline) in linear time.

    A deque holds the hull of the vertices seen so far, with the most recent
    vertex at both ends. A new vertex strictly left of both edges touching the
    ends is inside and skipped; otherwise ends are popped until the turns are
    strictly left again and the vertex is pushed on both sides. Collinear
    vertices are never kept.
    """
    arr = polygon.vertices if isinstance(polygon, SimplePolygon) else as_points(polygon, allow_empty=True)
    pts = [tuple(p) for p in dedupe_ring(np.asarray(arr, dtype=np.float64)).tolist()]
    n = len(pts)
    if n < 3:
        raise DegenerateInput(f"need at least three distinct vertices, got {n}")

    # Skip past a collinear prefix; its hull is the segment between its extremes.
    a, b = pts[0], pts[1]
    k = 2
    while k < n and orient(a, b, pts[k]) == Orientation.COLLINEAR:
        k += 1
    if k == n:
        raise DegenerateInput("all vertices are collinear")
    lo, hi = min(pts[:k]), max(pts[:k])
    c = pts[k]
    dq = deque((c, lo, hi, c) if is_left(lo, hi, c) else (c, hi, lo, c))

    for p in pts[k + 1:]:
        if is_left(dq[-2], dq[-1], p) and is_left(dq[0], dq[1], p):
            continue
        while len(dq) > 2 and not is_left(dq[-2], dq[-1], p):
            dq.pop()
        dq.append(p)
        while len(dq) > 2 and not is_left(dq[0], dq[1], p):
            dq.popleft()
        dq.appendleft(p)

    dq.pop()
    ring = _drop_collinear(list(dq))
    if len(ring) < 3:
        raise DegenerateInput("hull collapsed to fewer than three vertices")
    return Hull(canonical_ring(ring))
