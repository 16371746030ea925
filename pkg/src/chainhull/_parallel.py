"""Tiny helpers for splitting array work across a thread pool.

Numpy releases the GIL inside its kernels, so threads are enough for the
element-wise stages. Every helper returns results in submission order, which
keeps the output independent of the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

ENV_THREADS = "CHAINHULL_THREADS"

# Below this many elements per slice the pool costs more than it saves.
MIN_SLICE = 1 << 16


def resolve_workers(parallelism) -> int:
    if parallelism in (None, "auto"):
        env = os.environ.get(ENV_THREADS)
        if env:
            return max(1, int(env))
        return os.cpu_count() or 1
    workers = int(parallelism)
    if workers < 1:
        raise ValueError(f"parallelism must be >= 1, got {parallelism!r}")
    return workers


def slices(n: int, workers: int, min_slice: int | None = None) -> list[tuple[int, int]]:
    """Split range(n) into at most ``workers`` contiguous (lo, hi) slices."""
    if min_slice is None:
        min_slice = MIN_SLICE
    parts = max(1, min(workers, n // min_slice))
    step = -(-n // parts) if n else 0
    return [(lo, min(lo + step, n)) for lo in range(0, n, step)] if n else [(0, 0)]


def run(fn, items, workers: int) -> list:
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(fn, items))
