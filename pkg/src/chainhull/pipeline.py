"""End-to-end hull pipeline with per-stage statistics.

Stages, in order:

1. extreme points by sliced reduction
2. region labels for every non-extreme point
3. discard region 0 and group the rest by region
4. sort each region along its cap
5. threshold scan per region, then stable compaction of the survivors
6. join the chains into a simple polygon and run Melkman

All stages work on three buffers (x, y, region label) allocated once per call.
Reordering writes back into leading slices of those buffers, so survivors of
each stage always sit in ``buffer[:count]``.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass

import numpy as np

from . import _parallel
from .errors import DegenerateInput
from .finalize import Hull, assemble_polygon, melkman
from .geometry import Point2, as_points
from .oracle import hull_oracle
from .preprocess import REGIONS, ExtremeQuad, extreme_indices, region_labels, region_order
from .spa import DEFAULT_CHUNK_COUNT, RegionChain, sort_order, spa_keep_mask

STATS_COLUMNS = (
    "n_input", "n_after_round1", "n_after_spa", "n_hull",
    "t_extremes_ms", "t_classify_ms", "t_partition_ms", "t_sort_ms",
    "t_spa_ms", "t_melkman_ms", "t_total_ms",
)


@dataclass(frozen=True)
class PipelineConfig:
    chunk_count: int = DEFAULT_CHUNK_COUNT
    parallelism: int | str = "auto"
    degenerate_fallback: bool = True

    def __post_init__(self):
        if int(self.chunk_count) != self.chunk_count or self.chunk_count < 1:
            raise ValueError(f"chunk_count must be a positive integer, got {self.chunk_count!r}")
        if self.parallelism != "auto":
            _parallel.resolve_workers(self.parallelism)

    @property
    def workers(self) -> int:
        return _parallel.resolve_workers(self.parallelism)


@dataclass
class StageStats:
    """Point counts after each round (extreme points included) and stage times in ms."""

    n_input: int = 0
    n_after_round1: int = 0
    n_after_spa: int = 0
    n_hull: int = 0
    t_extremes: float = 0.0
    t_classify: float = 0.0
    t_partition: float = 0.0
    t_sort: float = 0.0
    t_spa: float = 0.0
    t_melkman: float = 0.0
    t_total: float = 0.0
    degenerate: bool = False

    def counts(self) -> tuple[int, int, int, int]:
        return self.n_input, self.n_after_round1, self.n_after_spa, self.n_hull

    def as_row(self) -> dict:
        """Flat mapping keyed by ``STATS_COLUMNS``."""
        d = asdict(self)
        row = {}
        for name in STATS_COLUMNS:
            key = name[:-3] if name.endswith("_ms") else name
            row[name] = d[key]
        return row

    @property
    def melkman_share(self) -> float:
        """Fraction of the total spent in the sequential finalisation."""
        return self.t_melkman / self.t_total if self.t_total > 0 else 0.0


@dataclass
class Workspace:
    """The three primary buffers one pipeline run operates on."""

    xs: np.ndarray
    ys: np.ndarray
    pos: np.ndarray

    @classmethod
    def from_points(cls, points) -> "Workspace":
        pts = as_points(points)
        return cls(pts[:, 0].copy(), pts[:, 1].copy(), np.zeros(len(pts), dtype=np.int8))

    def take(self, idx: np.ndarray) -> int:
        """Move the rows at ``idx`` (in that order) to the front; return their count."""
        k = len(idx)
        self.xs[:k] = self.xs[idx]
        self.ys[:k] = self.ys[idx]
        self.pos[:k] = self.pos[idx]
        return k

    def swap(self, i: int, j: int) -> None:
        for buf in (self.xs, self.ys, self.pos):
            buf[i], buf[j] = buf[j], buf[i]


class _Clock:
    def __init__(self):
        self.start = self.last = time.perf_counter()

    def lap(self) -> float:
        now = time.perf_counter()
        ms = (now - self.last) * 1e3
        self.last = now
        return ms

    def total(self) -> float:
        return (time.perf_counter() - self.start) * 1e3


def _segments(counts) -> dict[int, tuple[int, int]]:
    out, lo = {}, 0
    for r in REGIONS:
        out[r] = (lo, lo + counts[r])
        lo += counts[r]
    return out


def convex_hull(points, config: PipelineConfig | None = None) -> tuple[Hull, StageStats]:
    """Strict convex hull of a planar point set, plus stage statistics."""
    clock = _Clock()
    config = config or PipelineConfig()
    ws = Workspace.from_points(points)
    hull, stats = run_stages(ws, config, clock)
    return hull, stats


def run_stages(ws: Workspace, config: PipelineConfig, clock: _Clock | None = None
               ) -> tuple[Hull, StageStats]:
    clock = clock or _Clock()
    workers = config.workers
    xs, ys, pos = ws.xs, ws.ys, ws.pos
    n = len(xs)
    stats = StageStats(n_input=n)

    idx = extreme_indices(xs, ys, workers)
    quad = ExtremeQuad(*(Point2(float(xs[i]), float(ys[i])) for i in idx))
    # Hold the corners out of classification by parking them at the tail.
    held = sorted(set(idx))
    tail = n
    for i in reversed(held):
        tail -= 1
        ws.swap(i, tail)
    m = n - len(held)
    stats.t_extremes = clock.lap()

    region_labels(xs[:m], ys[:m], quad, out=pos[:m], workers=workers)
    stats.t_classify = clock.lap()

    order, counts = region_order(pos[:m])
    k = ws.take(order)
    stats.n_after_round1 = k + len(held)
    stats.t_partition = clock.lap()

    if quad.is_degenerate():
        if not config.degenerate_fallback:
            raise DegenerateInput("extreme points span no area")
        survivors = np.column_stack((xs[:k], ys[:k]))
        hull = hull_oracle(np.concatenate((survivors, np.asarray(quad.distinct()))))
        stats.n_after_spa = stats.n_after_round1
        stats.t_melkman = clock.lap()
        stats.n_hull = len(hull)
        stats.degenerate = True
        stats.t_total = clock.total()
        return hull, stats

    segs = _segments(counts)

    def sort_segment(r):
        lo, hi = segs[r]
        o = sort_order(r, xs[lo:hi], ys[lo:hi])
        xs[lo:hi] = xs[lo:hi][o]
        ys[lo:hi] = ys[lo:hi][o]

    _parallel.run(sort_segment, REGIONS, workers)
    stats.t_sort = clock.lap()

    for r in REGIONS:
        lo, hi = segs[r]
        keep = spa_keep_mask(r, xs[lo:hi], ys[lo:hi], quad.anchors(r)[0],
                             config.chunk_count, workers)
        pos[lo:hi][~keep] = 0
    # Stable, so each region stays sorted.
    sel = np.flatnonzero(pos[:k])
    k2 = ws.take(sel)
    counts = (0,) + tuple(int(c) for c in np.bincount(pos[:k2], minlength=5)[1:5])
    stats.n_after_spa = k2 + len(held)
    stats.t_spa = clock.lap()

    segs = _segments(counts)
    chains = []
    for r in REGIONS:
        lo, hi = segs[r]
        chains.append(RegionChain(r, np.column_stack((xs[lo:hi], ys[lo:hi])), *quad.anchors(r)))
    hull = melkman(assemble_polygon(chains, quad))
    stats.t_melkman = clock.lap()
    stats.n_hull = len(hull)
    stats.t_total = clock.total()
    return hull, stats


__all__ = [
    "PipelineConfig", "StageStats", "Workspace", "STATS_COLUMNS",
    "convex_hull", "run_stages", "hull_oracle",
]

