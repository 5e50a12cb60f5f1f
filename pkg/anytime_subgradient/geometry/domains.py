"""Convex action domains."""

import math
from abc import ABC, abstractmethod
from typing import Union

import numpy as np

from ..errors import InvalidInputError, InvalidParameterError, UnsupportedError
from .points import Point, as_points
from .projections import (
    check_alpha,
    project_box,
    project_curved,
    project_simplex,
    project_zero_sum,
)

# Absolute tolerance for membership tests.
CONTAINS_TOL = 1e-12

Flag = Union[bool, np.ndarray]


class ConvexDomain(ABC):
    """
    Projection target for the online learners.

    Every method accepts a single point of shape (d,) or a batch (..., d).
    """

    kind: str = "abstract"

    def __init__(self, dimension: int):
        if dimension < 1:
            raise InvalidParameterError(f"dimension must be >= 1, got {dimension}")
        self.dimension = int(dimension)

    @abstractmethod
    def project(self, w) -> Point:
        """Euclidean projection of w onto the domain."""

    @abstractmethod
    def contains(self, p, tol: float = CONTAINS_TOL) -> Flag:
        """Membership test with absolute tolerance."""

    @property
    @abstractmethod
    def diameter(self) -> float:
        """D = max distance between two points of the domain."""

    @property
    @abstractmethod
    def max_norm(self) -> float:
        """max{||x|| : x in domain}."""

    @abstractmethod
    def minimize_linear(self, c) -> Point:
        """A minimiser of c . x over the domain."""

    @property
    def is_compact(self) -> bool:
        return math.isfinite(self.diameter)

    def origin_action(self) -> Point:
        """P(0), the first action of the subgradient learners."""
        return self.project(np.zeros(self.dimension))

    def _points(self, w) -> Point:
        return as_points(w, dim=self.dimension)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.describe()})"

    def describe(self) -> str:
        return f"{self.kind}(d={self.dimension})"


class Simplex(ConvexDomain):
    """Probability simplex in R^d."""

    kind = "simplex"

    def project(self, w) -> Point:
        return project_simplex(self._points(w))

    def contains(self, p, tol: float = CONTAINS_TOL) -> Flag:
        p = self._points(p)
        return np.all(p >= -tol, axis=-1) & (np.abs(np.sum(p, axis=-1) - 1.0) <= tol)

    @property
    def diameter(self) -> float:
        return math.sqrt(2.0) if self.dimension > 1 else 0.0

    @property
    def max_norm(self) -> float:
        return 1.0

    def minimize_linear(self, c) -> Point:
        """Vertex e_j with the smallest c(j); ties go to the smallest index."""
        c = self._points(c)
        return vertex(np.argmin(c, axis=-1), self.dimension)


class Box(ConvexDomain):
    """Axis-aligned box [lo, hi]."""

    kind = "box"

    def __init__(self, lo, hi):
        lo = as_points(lo)
        hi = as_points(hi, dim=lo.shape[-1])
        if lo.ndim != 1:
            raise InvalidInputError("box corners must be single points")
        if np.any(lo > hi):
            raise InvalidInputError("box lower corner exceeds upper corner")
        super().__init__(lo.shape[0])
        self.lo = lo
        self.hi = hi

    def project(self, w) -> Point:
        return project_box(self._points(w), self.lo, self.hi)

    def contains(self, p, tol: float = CONTAINS_TOL) -> Flag:
        p = self._points(p)
        return np.all((p >= self.lo - tol) & (p <= self.hi + tol), axis=-1)

    @property
    def diameter(self) -> float:
        return float(np.linalg.norm(self.hi - self.lo))

    @property
    def max_norm(self) -> float:
        return float(np.linalg.norm(np.maximum(np.abs(self.lo), np.abs(self.hi))))

    def minimize_linear(self, c) -> Point:
        """Per-axis sign rule; zero components take the lower corner."""
        c = self._points(c)
        return np.where(c < 0.0, self.hi, self.lo)

    def describe(self) -> str:
        return f"{self.kind}(lo={self.lo.tolist()}, hi={self.hi.tolist()})"


class Interval(Box):
    """Scalar interval [lo, hi], a one-dimensional box."""

    kind = "interval"

    def __init__(self, lo: float = -1.0, hi: float = 1.0):
        super().__init__([lo], [hi])


class CurvedDomain(ConvexDomain):
    """
    The cap {(x, y) : |x|^alpha <= y <= 1} of the region above y = |x|^alpha.

    Flat only to order alpha at the origin, which is what breaks the
    constant pseudo-regret of lazy Subgradient here.
    """

    kind = "curved"

    def __init__(self, alpha: float = 3.0):
        super().__init__(2)
        self.alpha = check_alpha(alpha)

    def project(self, w) -> Point:
        return project_curved(self._points(w), self.alpha)

    def contains(self, p, tol: float = CONTAINS_TOL) -> Flag:
        p = self._points(p)
        x, y = p[..., 0], p[..., 1]
        return (np.abs(x) ** self.alpha <= y + tol) & (y <= 1.0 + tol)

    @property
    def diameter(self) -> float:
        return 2.0

    @property
    def max_norm(self) -> float:
        return math.sqrt(2.0)

    def minimize_linear(self, c) -> Point:
        """
        Minimise c . x in closed form.

        For c(2) > 0 the lower curve has the stationary point
        x = -sign(c1) (|c1| / (alpha c2))^(1/(alpha-1)); the corners (-1, 1)
        and (1, 1) cover every other case. Ties keep the earlier candidate.
        """
        c = self._points(c)
        c1, c2 = c[..., 0], c[..., 1]
        a = self.alpha
        with np.errstate(divide="ignore", invalid="ignore"):
            r = np.where(c2 > 0.0, (np.abs(c1) / (a * np.where(c2 > 0.0, c2, 1.0))) ** (1.0 / (a - 1.0)), 1.0)
        xs = np.clip(-np.sign(c1) * r, -1.0, 1.0)
        stationary = np.stack([xs, np.abs(xs) ** a], axis=-1)
        left = np.broadcast_to(np.array([-1.0, 1.0]), c.shape)
        right = np.broadcast_to(np.array([1.0, 1.0]), c.shape)

        candidates = np.stack([stationary, left, right], axis=-2)
        values = np.sum(candidates * c[..., None, :], axis=-1)
        best = np.argmin(values, axis=-1)
        return np.take_along_axis(candidates, best[..., None, None], axis=-2)[..., 0, :]

    def describe(self) -> str:
        return f"{self.kind}(alpha={self.alpha:g})"


class ZeroSumHyperplane(ConvexDomain):
    """The hyperplane V = {x : sum x(j) = 0}; unbounded."""

    kind = "zero_sum"

    def project(self, w) -> Point:
        return project_zero_sum(self._points(w))

    def contains(self, p, tol: float = CONTAINS_TOL) -> Flag:
        p = self._points(p)
        return np.abs(np.sum(p, axis=-1)) <= tol

    @property
    def diameter(self) -> float:
        return math.inf

    @property
    def max_norm(self) -> float:
        return math.inf

    def minimize_linear(self, c) -> Point:
        raise UnsupportedError("linear costs are unbounded below on the zero-sum hyperplane")


def vertex(index, dimension: int) -> Point:
    """One-hot vector(s) e_index in R^dimension."""
    index = np.asarray(index)
    out = np.zeros(index.shape + (dimension,))
    np.put_along_axis(out, index[..., None], 1.0, axis=-1)
    return out
