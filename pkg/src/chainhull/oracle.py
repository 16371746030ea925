"""Reference hull: Andrew's monotone chain over every input point.

Used as ground truth by the test suite and the ``verify`` command. It shares
the orientation predicate with the pipeline, so equal inputs must give
identical rings.
"""

from __future__ import annotations

import numpy as np

from .finalize import Hull
from .geometry import Point2, as_points, is_left


def hull_oracle(points) -> Hull:
    pts = as_points(points)
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    srt = pts[order]
    distinct = np.ones(len(srt), dtype=bool)
    distinct[1:] = np.any(srt[1:] != srt[:-1], axis=1)
    ps = [tuple(p) for p in srt[distinct].tolist()]
    if len(ps) <= 2:
        return Hull([Point2(*p) for p in ps])

    lower: list = []
    for p in ps:
        while len(lower) >= 2 and not is_left(lower[-2], lower[-1], p):
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(ps):
        while len(upper) >= 2 and not is_left(upper[-2], upper[-1], p):
            upper.pop()
        upper.append(p)
    ring = lower[:-1] + upper[:-1]
    return Hull([Point2(*p) for p in ring])
