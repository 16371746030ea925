"""Synthetic point sets and point/hull/stats file formats.

Generators draw from ``numpy.random.Generator(PCG64(seed))``, so a
(distribution, n, seed) triple always yields the same bytes.

File formats
------------
xy_text
    One point per line, two whitespace-separated decimals. Blank lines and
    lines starting with ``#`` are skipped. Written with 17 significant digits
    so doubles survive a round trip.
xy_binary
    Consecutive little-endian float64 pairs, x then y, no header.
obj_vertices
    Wavefront OBJ; every ``v`` line contributes (x, y), z is dropped, all
    other lines are ignored.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import IoError, NonFiniteCoordinate, ParseError
from .pipeline import STATS_COLUMNS

DISTRIBUTIONS = ("uniform_square", "uniform_disk", "circle", "gaussian", "collinear", "duplicates_heavy")
FORMATS = ("xy_text", "xy_binary", "obj_vertices")


@dataclass(frozen=True)
class DatasetSpec:
    distribution: str
    n: int
    seed: int = 0

    def __post_init__(self):
        if self.distribution not in DISTRIBUTIONS:
            raise ValueError(f"unknown distribution {self.distribution!r}; pick one of {DISTRIBUTIONS}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")


def generate(spec: DatasetSpec) -> np.ndarray:
    """Point set for ``spec`` as an ``(n, 2)`` float64 array."""
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    n = spec.n
    dist = spec.distribution
    if dist == "uniform_square":
        return rng.random((n, 2))
    if dist == "uniform_disk":
        r = np.sqrt(rng.random(n))
        theta = rng.random(n) * (2 * math.pi)
        return np.column_stack((r * np.cos(theta), r * np.sin(theta)))
    if dist == "circle":
        # Evenly spaced angles with a random phase: every point is a hull vertex.
        theta = rng.random() * (2 * math.pi) + np.arange(n) * (2 * math.pi / n)
        return np.column_stack((np.cos(theta), np.sin(theta)))
    if dist == "gaussian":
        return rng.standard_normal((n, 2))
    if dist == "collinear":
        # Integer coordinates keep every orientation test exact.
        while True:
            dx, dy = (int(v) for v in rng.integers(-3, 4, size=2))
            if dx or dy:
                break
        ox, oy = (int(v) for v in rng.integers(-1000, 1001, size=2))
        t = rng.integers(-(10 ** 6), 10 ** 6 + 1, size=n)
        return np.column_stack((ox + t * dx, oy + t * dy)).astype(np.float64)
    # duplicates_heavy: an 8x8 grid of exactly representable values.
    return rng.integers(0, 8, size=(n, 2)).astype(np.float64) / 4.0


def _check_finite(x: float, y: float, line, path) -> None:
    if not (math.isfinite(x) and math.isfinite(y)):
        where = f"{path}:{line}" if line is not None else str(path)
        raise NonFiniteCoordinate(f"{where}: non-finite coordinate ({x}, {y})")


def _read_text(path: Path) -> np.ndarray:
    pts = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 2:
                raise ParseError(f"expected 2 values, found {len(fields)}", lineno, path)
            try:
                x, y = float(fields[0]), float(fields[1])
            except ValueError:
                raise ParseError(f"not a number: {line!r}", lineno, path) from None
            _check_finite(x, y, lineno, path)
            pts.append((x, y))
    return np.asarray(pts, dtype=np.float64).reshape(-1, 2)


def _read_obj(path: Path) -> np.ndarray:
    pts = []
    with open(path, encoding="utf-8", errors="replace") as fh:
        for lineno, raw in enumerate(fh, start=1):
            if not raw.startswith("v "):
                continue
            fields = raw.split()[1:]
            if len(fields) < 3:
                raise ParseError(f"vertex needs 3 coordinates, found {len(fields)}", lineno, path)
            try:
                x, y = float(fields[0]), float(fields[1])
                float(fields[2])
            except ValueError:
                raise ParseError(f"not a number: {raw.strip()!r}", lineno, path) from None
            _check_finite(x, y, lineno, path)
            pts.append((x, y))
    return np.asarray(pts, dtype=np.float64).reshape(-1, 2)


def _read_binary(path: Path) -> np.ndarray:
    raw = Path(path).read_bytes()
    if len(raw) % 16:
        raise ParseError(f"size {len(raw)} bytes is not a multiple of 16", None, path)
    arr = np.frombuffer(raw, dtype="<f8").astype(np.float64).reshape(-1, 2)
    finite = np.isfinite(arr).all(axis=1)
    if not finite.all():
        bad = int(np.flatnonzero(~finite)[0])
        raise NonFiniteCoordinate(f"{path}: point {bad} is non-finite")
    return arr


def read_points(path, format: str = "xy_text") -> np.ndarray:
    path = Path(path)
    if format == "xy_text":
        return _read_text(path)
    if format == "xy_binary":
        return _read_binary(path)
    if format == "obj_vertices":
        return _read_obj(path)
    raise ValueError(f"unknown format {format!r}; pick one of {FORMATS}")


def format_xy_text(points) -> str:
    return "".join(f"{x:.17g} {y:.17g}\n" for x, y in np.asarray(points, dtype=np.float64).reshape(-1, 2).tolist())


def write_points(points, path, format: str = "xy_text") -> None:
    arr = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    try:
        if format == "xy_text":
            Path(path).write_text(format_xy_text(arr), encoding="utf-8")
        elif format == "xy_binary":
            Path(path).write_bytes(arr.astype("<f8").tobytes())
        elif format == "obj_vertices":
            Path(path).write_text("".join(f"v {x:.17g} {y:.17g} 0\n" for x, y in arr.tolist()),
                                  encoding="utf-8")
        else:
            raise ValueError(f"unknown format {format!r}; pick one of {FORMATS}")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc.strerror or exc}") from exc


def write_hull(hull, path) -> None:
    """Hull vertices as xy_text, in ring order from the canonical start vertex."""
    write_points(hull.vertices if hasattr(hull, "vertices") else hull, path, "xy_text")


def write_stats(stats, path, format: str = "csv") -> None:
    row = stats.as_row()
    try:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            if format == "csv":
                writer = csv.DictWriter(fh, fieldnames=STATS_COLUMNS)
                writer.writeheader()
                writer.writerow(row)
            elif format == "json":
                json.dump(row, fh, indent=2)
                fh.write("\n")
            else:
                raise ValueError(f"unknown stats format {format!r}")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc.strerror or exc}") from exc
