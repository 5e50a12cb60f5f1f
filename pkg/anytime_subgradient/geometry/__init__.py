"""Convex domains and exact Euclidean projections."""

from .points import Point, as_points, parse_point, format_point
from .projections import project_simplex, project_zero_sum, project_box, project_curved
from .domains import (
    ConvexDomain,
    Simplex,
    Box,
    Interval,
    CurvedDomain,
    ZeroSumHyperplane,
    vertex,
)
from .oracle import brute_force_project

__all__ = [
    "Point",
    "as_points",
    "parse_point",
    "format_point",
    "project_simplex",
    "project_zero_sum",
    "project_box",
    "project_curved",
    "ConvexDomain",
    "Simplex",
    "Box",
    "Interval",
    "CurvedDomain",
    "ZeroSumHyperplane",
    "vertex",
    "brute_force_project",
]
