"""Second round of discarding: per-region sort and threshold scan.

Each region is sorted along its cap so that walking the sorted run goes
counterclockwise from the region's first corner to its last:

    region  first   last    primary key   secondary key
    1       p_minx  p_miny  x ascending   y descending
    2       p_miny  p_maxx  y ascending   x ascending
    3       p_maxx  p_maxy  x descending  y ascending
    4       p_maxy  p_minx  y descending  x descending

The scan then tracks a threshold ``t`` on one guarded coordinate (y for 1 and
3, x for 2 and 4). A point that falls on the wrong side of ``t`` sits inside
the triangle of the last kept point and the two region corners, so it is
dropped; otherwise it is kept and becomes the new threshold. Ties are kept.

The scan has a loop-carried dependency. To expose parallelism the run is cut
into ``chunk_count`` contiguous chunks of ``ceil(m / chunk_count)`` points that
are scanned independently. Chunk 0 starts from the first corner's coordinate,
every other chunk keeps its first point unconditionally. Chunking only ever
keeps extra points, never drops a hull vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _parallel
from .geometry import Point2, as_points

DEFAULT_CHUNK_COUNT = 1024


@dataclass(frozen=True)
class SpaConfig:
    chunk_count: int = DEFAULT_CHUNK_COUNT

    def __post_init__(self):
        if int(self.chunk_count) != self.chunk_count or self.chunk_count < 1:
            raise ValueError(f"chunk_count must be a positive integer, got {self.chunk_count!r}")


@dataclass
class RegionSegment:
    region: int
    points: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.region not in (1, 2, 3, 4):
            raise ValueError(f"region must be 1..4, got {self.region!r}")
        self.points = as_points(self.points, allow_empty=True)

    @property
    def m(self) -> int:
        return len(self.points)


@dataclass
class RegionChain:
    region: int
    kept: np.ndarray = field(repr=False)
    anchor_start: Point2 | None = None
    anchor_end: Point2 | None = None

    def __len__(self) -> int:
        return len(self.kept)


def sort_order(region: int, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Permutation putting one region's points into its compound-key order."""
    # np.lexsort sorts by the last key first.
    if region == 1:
        keys = (-ys, xs)
    elif region == 2:
        keys = (xs, ys)
    elif region == 3:
        keys = (ys, -xs)
    elif region == 4:
        keys = (-xs, -ys)
    else:
        raise ValueError(f"region must be 1..4, got {region!r}")
    return np.lexsort(keys)


def guard_key(region: int, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Guarded coordinate, sign-flipped so that every region keeps ``key <= t``."""
    return {1: lambda: ys, 2: lambda: -xs, 3: lambda: -ys, 4: lambda: xs}[region]()


def _start_threshold(region: int, anchor) -> float:
    x, y = anchor
    return {1: y, 2: -x, 3: -y, 4: x}[region]


def _scan_rows(keys: np.ndarray, first_threshold: float | None) -> np.ndarray:
    # keys: (rows, width), padded with +inf. Row r keeps column j when its key
    # is <= every earlier key in the row (and the start threshold for row 0).
    prev = np.empty_like(keys)
    prev[:, 0] = np.inf
    if keys.shape[1] > 1:
        np.minimum.accumulate(keys[:, :-1], axis=1, out=prev[:, 1:])
    if first_threshold is not None:
        np.minimum(prev[0], first_threshold, out=prev[0])
    return keys <= prev


def spa_keep_mask(region: int, xs: np.ndarray, ys: np.ndarray, anchor_start,
                  chunk_count: int = DEFAULT_CHUNK_COUNT, workers: int = 1) -> np.ndarray:
    """Boolean keep-mask for a region run that is already sorted by ``sort_order``."""
    m = len(xs)
    if m == 0:
        return np.zeros(0, dtype=bool)
    width = -(-m // chunk_count)
    rows = -(-m // width)
    keys = np.full(rows * width, np.inf)
    keys[:m] = guard_key(region, xs, ys)
    keys = keys.reshape(rows, width)
    t0 = _start_threshold(region, anchor_start)

    blocks = _parallel.slices(rows, workers, min_slice=max(1, _parallel.MIN_SLICE // width))
    parts = _parallel.run(
        lambda s: _scan_rows(keys[s[0]:s[1]], t0 if s[0] == 0 else None), blocks, workers)
    return np.concatenate(parts).ravel()[:m]


def sort_region(segment: RegionSegment) -> RegionSegment:
    pts = segment.points
    order = sort_order(segment.region, pts[:, 0], pts[:, 1])
    return RegionSegment(segment.region, pts[order])


def spa_filter(segment: RegionSegment, anchor_start, anchor_end,
               config: SpaConfig = SpaConfig()) -> RegionChain:
    """Scan a sorted region run and return the points it keeps, in order.

    ``anchor_start``/``anchor_end`` are the corners bounding the region; they
    frame the chain but are not part of it.
    """
    pts = segment.points
    keep = spa_keep_mask(segment.region, pts[:, 0], pts[:, 1], anchor_start, config.chunk_count)
    return RegionChain(segment.region, pts[keep], Point2(*map(float, anchor_start)),
                       Point2(*map(float, anchor_end)))
