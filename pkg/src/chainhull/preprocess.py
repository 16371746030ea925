"""First round of interior-point discarding.

The four extreme points span a quadrilateral ``p_minx -> p_miny -> p_maxx ->
p_maxy`` (counterclockwise, possibly with repeated corners). Every other point
either lies inside or on it (region 0, discarded) or in exactly one of the four
caps beyond its edges:

    1  lower left   beyond p_minx -> p_miny
    2  lower right  beyond p_miny -> p_maxx
    3  upper right  beyond p_maxx -> p_maxy
    4  upper left   beyond p_maxy -> p_minx

"Beyond" means strictly to the right of the directed CCW edge. Edges are tested
in the order above and the first hit wins.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _parallel
from .errors import EmptyInput
from .geometry import Point2, as_points, cross

INTERIOR = 0
REGIONS = (1, 2, 3, 4)
REGION_NAMES = {0: "interior", 1: "lower_left", 2: "lower_right", 3: "upper_right", 4: "upper_left"}


class ExtremeQuad(NamedTuple):
    p_minx: Point2
    p_miny: Point2
    p_maxx: Point2
    p_maxy: Point2

    def distinct(self) -> list[Point2]:
        """Corners in CCW order with repeats removed."""
        out: list[Point2] = []
        for p in self:
            if p not in out:
                out.append(p)
        return out

    def is_degenerate(self) -> bool:
        """True when the corners span no area (at most two distinct, or all collinear)."""
        pts = self.distinct()
        if len(pts) <= 2:
            return True
        a, b = pts[0], pts[1]
        return all(cross(a[0], a[1], b[0], b[1], p[0], p[1]) == 0.0 for p in pts[2:])

    def anchors(self, region: int) -> tuple[Point2, Point2]:
        """(first, last) corner bounding the given cap."""
        return self[region - 1], self[region % 4]


@dataclass
class LabeledPoints:
    points: np.ndarray
    labels: np.ndarray
    region_counts: tuple[int, int, int, int, int]

    def __len__(self) -> int:
        return len(self.labels)

    def segment(self, region: int) -> np.ndarray:
        """Points of one region, assuming the set has been grouped by discard_round1."""
        start = sum(self.region_counts[1:region])
        return self.points[start:start + self.region_counts[region]]


# Per extreme: (primary column, primary sign, secondary column, secondary sign),
# minimising sign * value. Ties on a side resolve to the vertex met first when
# walking that side counterclockwise, which keeps the corners distinct for
# axis-aligned edges:
#   p_minx: top of the left side     p_miny: left end of the bottom side
#   p_maxx: bottom of the right side  p_maxy: right end of the top side
_EXTREME_KEYS = (
    (0, 1.0, 1, -1.0),
    (1, 1.0, 0, 1.0),
    (0, -1.0, 1, 1.0),
    (1, -1.0, 0, -1.0),
)


def _argbest(a: np.ndarray, sign: float, cand=None) -> np.ndarray:
    vals = a if cand is None else a[cand]
    best = vals.min() if sign > 0 else vals.max()
    hits = np.flatnonzero(vals == best)
    return hits if cand is None else cand[hits]


def _slice_extremes(cols, lo: int, hi: int) -> list[int]:
    out = []
    for primary, psign, secondary, ssign in _EXTREME_KEYS:
        cand = _argbest(cols[primary][lo:hi], psign)
        out.append(lo + int(_argbest(cols[secondary][lo:hi], ssign, cand)[0]))
    return out


def extreme_indices(xs: np.ndarray, ys: np.ndarray, workers: int = 1) -> list[int]:
    """Indices of p_minx, p_miny, p_maxx, p_maxy by a sliced reduction.

    Each slice reduces independently; partial winners are combined with the
    same lexicographic key, falling back to the lower index on exact
    duplicates, so the answer does not depend on how the range was split.
    """
    n = len(xs)
    if n == 0:
        raise EmptyInput("no points given")
    cols = (xs, ys)
    parts = _parallel.run(lambda s: _slice_extremes(cols, *s), _parallel.slices(n, workers), workers)
    result = []
    for k, (primary, psign, secondary, ssign) in enumerate(_EXTREME_KEYS):
        result.append(min(
            (part[k] for part in parts),
            key=lambda i: (psign * cols[primary][i], ssign * cols[secondary][i], i),
        ))
    return result


def find_extremes(points, parallelism: int = 1) -> ExtremeQuad:
    pts = as_points(points)
    xs, ys = pts[:, 0], pts[:, 1]
    idx = extreme_indices(xs, ys, _parallel.resolve_workers(parallelism))
    return ExtremeQuad(*(Point2(float(xs[i]), float(ys[i])) for i in idx))


def _label_slice(xs, ys, quad: ExtremeQuad, out: np.ndarray) -> None:
    a, b, c, d = quad
    out.fill(INTERIOR)
    # Later rules must not overwrite earlier ones, so assign in reverse order.
    for region, (p, q) in zip((4, 3, 2, 1), ((d, a), (c, d), (b, c), (a, b))):
        beyond = cross(p[0], p[1], q[0], q[1], xs, ys) < 0.0
        out[beyond] = region


def region_labels(xs: np.ndarray, ys: np.ndarray, quad: ExtremeQuad,
                  out: np.ndarray | None = None, workers: int = 1) -> np.ndarray:
    """Write the region label of every point into ``out`` (int8) and return it."""
    if out is None:
        out = np.empty(len(xs), dtype=np.int8)

    def work(s):
        lo, hi = s
        _label_slice(xs[lo:hi], ys[lo:hi], quad, out[lo:hi])

    _parallel.run(work, _parallel.slices(len(xs), workers), workers)
    return out


def _counts(labels: np.ndarray) -> tuple[int, int, int, int, int]:
    return tuple(int(c) for c in np.bincount(labels, minlength=5)[:5])


def classify(points, quad: ExtremeQuad, parallelism: int = 1) -> LabeledPoints:
    """Label each point 0..4 against the extreme quadrilateral.

    The extreme points themselves sit on the quadrilateral and would come out
    as 0. Callers hold them out before classifying (the pipeline moves them to
    the tail of its buffers) and re-attach them as chain anchors later.
    """
    pts = as_points(points, allow_empty=True)
    labels = region_labels(pts[:, 0], pts[:, 1], quad, workers=_parallel.resolve_workers(parallelism))
    return LabeledPoints(pts, labels, _counts(labels))


def region_order(labels: np.ndarray) -> tuple[np.ndarray, tuple[int, int, int, int, int]]:
    """Indices of all non-interior points grouped by region, plus per-region counts."""
    kept = np.flatnonzero(labels)
    order = kept[np.argsort(labels[kept], kind="stable")]
    return order, (0,) + _counts(labels)[1:]


def discard_round1(labeled: LabeledPoints) -> LabeledPoints:
    """Drop region-0 points and lay the rest out as one contiguous run per region."""
    order, counts = region_order(labeled.labels)
    return LabeledPoints(labeled.points[order], labeled.labels[order], counts)
