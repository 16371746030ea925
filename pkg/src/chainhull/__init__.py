"""Data-parallel 2D convex hull: quadrilateral discard, sorted-chain discard, Melkman."""

from .datasets import DatasetSpec, generate, read_points, write_hull, write_points, write_stats
from .errors import (ChainHullError, DegenerateInput, EmptyInput, IoError, NonFiniteCoordinate,
                     ParseError)
from .finalize import Hull, SimplePolygon, assemble_polygon, melkman
from .geometry import Orientation, Point2, orient
from .oracle import hull_oracle
from .pipeline import PipelineConfig, StageStats, convex_hull
from .preprocess import ExtremeQuad, LabeledPoints, classify, discard_round1, find_extremes
from .spa import RegionChain, RegionSegment, SpaConfig, sort_region, spa_filter

__version__ = "0.1.0"

__all__ = [
    "ChainHullError", "DatasetSpec", "DegenerateInput", "EmptyInput", "ExtremeQuad", "Hull",
    "IoError", "LabeledPoints", "NonFiniteCoordinate", "Orientation", "ParseError",
    "PipelineConfig", "Point2", "RegionChain", "RegionSegment", "SimplePolygon", "SpaConfig",
    "StageStats", "assemble_polygon", "classify", "convex_hull", "discard_round1",
    "find_extremes", "generate", "hull_oracle", "melkman", "orient", "read_points",
    "sort_region", "spa_filter", "write_hull", "write_points", "write_stats",
]
