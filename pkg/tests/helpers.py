"""Independent oracles and generators used across the test suite."""

import math

import numpy as np


def sign_cross(a, b, p):
    c = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
    return int(c > 0) - int(c < 0)


def brute_force_hull(points):
    """Strict CCW hull by testing every ordered pair as a candidate edge. O(n^3)."""
    pts = sorted(set(map(tuple, points)))
    if len(pts) <= 2:
        return pts
    edges = {}
    for a in pts:
        for b in pts:
            if a == b:
                continue
            ok = True
            for p in pts:
                s = sign_cross(a, b, p)
                if s < 0:
                    ok = False
                    break
                if s == 0 and p not in (a, b):
                    # collinear points must lie strictly between a and b
                    t = (p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1])
                    if t < 0 or t > (b[0] - a[0]) ** 2 + (b[1] - a[1]) ** 2:
                        ok = False
                        break
            if ok:
                edges[a] = b
    if not edges:
        # all collinear: the two extremes
        return [pts[0], pts[-1]]
    start = min(edges)
    ring = [start]
    while edges[ring[-1]] != start:
        ring.append(edges[ring[-1]])
    return ring


def in_closed_triangle(p, a, b, c):
    s = {sign_cross(a, b, p), sign_cross(b, c, p), sign_cross(c, a, p)}
    return not (1 in s and -1 in s)


def _orient_arr(ax, ay, bx, by, px, py):
    return np.sign((bx - ax) * (py - ay) - (by - ay) * (px - ax))


def is_simple(ring) -> bool:
    """Brute-force check that a closed ring has no self-intersections or overlaps."""
    v = np.asarray(ring, dtype=np.float64)
    n = len(v)
    if n < 3 or len(np.unique(v, axis=0)) != n:
        return False
    a = v
    b = np.roll(v, -1, axis=0)
    ax, ay, bx, by = a[:, 0][:, None], a[:, 1][:, None], b[:, 0][:, None], b[:, 1][:, None]
    cx, cy, dx, dy = a[:, 0][None, :], a[:, 1][None, :], b[:, 0][None, :], b[:, 1][None, :]
    d1 = _orient_arr(cx, cy, dx, dy, ax, ay)
    d2 = _orient_arr(cx, cy, dx, dy, bx, by)
    d3 = _orient_arr(ax, ay, bx, by, cx, cy)
    d4 = _orient_arr(ax, ay, bx, by, dx, dy)
    proper = (d1 * d2 < 0) & (d3 * d4 < 0)

    def on_seg(px, py, qx, qy, rx, ry):
        # r collinear with p-q: inside the closed bounding box
        return ((np.minimum(px, qx) <= rx) & (rx <= np.maximum(px, qx))
                & (np.minimum(py, qy) <= ry) & (ry <= np.maximum(py, qy)))

    touch = ((d1 == 0) & on_seg(cx, cy, dx, dy, ax, ay)) | ((d2 == 0) & on_seg(cx, cy, dx, dy, bx, by)) \
        | ((d3 == 0) & on_seg(ax, ay, bx, by, cx, cy)) | ((d4 == 0) & on_seg(ax, ay, bx, by, dx, dy))
    hit = proper | touch
    i, j = np.indices((n, n))
    adjacent = (j == (i + 1) % n) | (i == (j + 1) % n) | (i == j)
    if (hit & ~adjacent).any():
        return False
    # adjacent edges a->b->c must not fold back on themselves
    c = np.roll(v, -2, axis=0)
    col = _orient_arr(a[:, 0], a[:, 1], b[:, 0], b[:, 1], c[:, 0], c[:, 1]) == 0
    back = ((b - a) * (c - b)).sum(axis=1) < 0
    return not (col & back).any()


def random_star_polygon(rng, n, integer=False):
    """Points sorted by angle about an interior centre. Retries until simple."""
    while True:
        if integer:
            pts = rng.integers(-20, 21, size=(n, 2)).astype(float)
        else:
            theta = rng.random(n) * 2 * math.pi
            r = 0.2 + rng.random(n)
            pts = np.column_stack((r * np.cos(theta), r * np.sin(theta)))
        pts = np.unique(pts, axis=0)
        centre = pts.mean(axis=0)
        ang = np.arctan2(pts[:, 1] - centre[1], pts[:, 0] - centre[0])
        ring = pts[np.argsort(ang, kind="stable")]
        if len(ring) >= 3 and is_simple(ring):
            return ring


def random_monotone_polygon(rng, n):
    """x-monotone polygon: lower chain left to right, upper chain back."""
    while True:
        pts = np.unique(rng.random((n, 2)), axis=0)
        pts = pts[np.argsort(pts[:, 0])]
        left, right = pts[0], pts[-1]
        mid = pts[1:-1]
        above = np.array([sign_cross(left, right, p) > 0 for p in mid], dtype=bool)
        ring = np.concatenate(([left], mid[~above], [right], mid[above][::-1]))
        if len(ring) >= 3 and is_simple(ring):
            return ring
