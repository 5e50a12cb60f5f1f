"""Exact Euclidean projections.

All functions accept a single point of shape (d,) or a batch of shape
(..., d) and project every row independently. Rows of a batch give the
same bits as projecting them one at a time.
"""

import logging

import numpy as np

from ..errors import InvalidInputError, InvalidParameterError
from .points import Point, as_points

logger = logging.getLogger(__name__)

# Grid used to bracket stationary points on the curved boundary.
CURVED_GRID_SIZE = 64
BISECTION_TOL = 1e-12


def project_simplex(w) -> Point:
    """
    Project onto the probability simplex by sort-and-threshold.

    Sort descending, find the last pivot j with u(j) > (sum_{i<=j} u(i) - 1)/j,
    subtract that threshold and clamp at zero. O(d log d) per point.

    Args:
        w: Point(s) of dimension d >= 1

    Returns:
        Projected point(s) with non-negative entries summing to one
    """
    w = as_points(w)
    d = w.shape[-1]
    u = -np.sort(-w, axis=-1)
    css = np.cumsum(u, axis=-1) - 1.0
    ranks = np.arange(1, d + 1, dtype=np.float64)
    support = u - css / ranks > 0
    # last index where the pivot test holds
    rho = d - 1 - np.argmax(support[..., ::-1], axis=-1)
    theta = np.take_along_axis(css, rho[..., None], axis=-1) / (rho[..., None] + 1.0)
    return np.maximum(w - theta, 0.0)


def project_zero_sum(w) -> Point:
    """Project onto the hyperplane {x : sum x(j) = 0} by removing the mean."""
    w = as_points(w)
    return w - np.mean(w, axis=-1, keepdims=True)


def project_box(w, lo, hi) -> Point:
    """
    Clamp each coordinate into [lo, hi].

    Raises:
        InvalidInputError: lo > hi in some component, or shapes disagree
    """
    w = as_points(w)
    lo = as_points(lo, dim=w.shape[-1])
    hi = as_points(hi, dim=w.shape[-1])
    if np.any(lo > hi):
        raise InvalidInputError("box lower corner exceeds upper corner")
    return np.clip(w, lo, hi)


def check_alpha(alpha: float) -> float:
    """Validate the exponent of a curved domain (alpha > 2)."""
    alpha = float(alpha)
    if not np.isfinite(alpha) or alpha <= 2.0:
        raise InvalidParameterError(f"curved domain needs alpha > 2, got {alpha}")
    return alpha


def _curve_slope(x, w1, w2, alpha):
    """Half the derivative of (x - w1)^2 + (|x|^alpha - w2)^2."""
    ax = np.abs(x)
    return (x - w1) + alpha * (ax ** alpha - w2) * np.sign(x) * ax ** (alpha - 1.0)


def _nearest_on_curve(w1: np.ndarray, w2: np.ndarray, alpha: float) -> np.ndarray:
    """
    Abscissa of the nearest point of {(x, |x|^alpha) : |x| <= 1} to each (w1, w2).

    Stationary points are bracketed on a fixed grid (slope going from <= 0
    to > 0) and bisected; the endpoints x = +-1 are always candidates. The
    candidate with the smallest squared distance wins, endpoints first on ties.
    """
    m = w1.shape[0]
    grid = np.linspace(-1.0, 1.0, CURVED_GRID_SIZE)
    slope = _curve_slope(grid[None, :], w1[:, None], w2[:, None], alpha)
    brackets = (slope[:, :-1] <= 0.0) & (slope[:, 1:] > 0.0)
    rows, cells = np.nonzero(brackets)

    lo = grid[cells]
    hi = grid[cells + 1]
    b1 = w1[rows]
    b2 = w2[rows]
    width = 2.0 / (CURVED_GRID_SIZE - 1)
    for _ in range(int(np.ceil(np.log2(width / BISECTION_TOL)))):
        mid = 0.5 * (lo + hi)
        right = _curve_slope(mid, b1, b2, alpha) <= 0.0
        lo = np.where(right, mid, lo)
        hi = np.where(right, hi, mid)
    roots = 0.5 * (lo + hi)

    index = np.arange(m)
    cand_rows = np.concatenate([index, index, rows])
    cand_x = np.concatenate([-np.ones(m), np.ones(m), roots])
    dist = (cand_x - w1[cand_rows]) ** 2 + (np.abs(cand_x) ** alpha - w2[cand_rows]) ** 2
    order = np.lexsort((dist, cand_rows))
    _, first = np.unique(cand_rows[order], return_index=True)
    return cand_x[order[first]]


def project_curved(w, alpha: float) -> Point:
    """
    Project onto the curved domain {(x, y) : |x|^alpha <= y <= 1}.

    Interior points are returned unchanged. Otherwise the nearest point of
    the boundary is the closer of the projection onto the lower curve
    y = |x|^alpha (a 1-D root find) and the projection onto the top edge y = 1.

    Args:
        w: Point(s) in R^2
        alpha: Curvature exponent, alpha > 2

    Returns:
        Projected point(s)
    """
    w = as_points(w, dim=2)
    alpha = check_alpha(alpha)
    flat = w.reshape(-1, 2)
    w1, w2 = flat[:, 0], flat[:, 1]

    inside = (np.abs(w1) ** alpha <= w2) & (w2 <= 1.0)

    xc = _nearest_on_curve(w1, w2, alpha)
    curve = np.stack([xc, np.abs(xc) ** alpha], axis=-1)
    top = np.stack([np.clip(w1, -1.0, 1.0), np.ones_like(w1)], axis=-1)
    d_curve = np.sum((curve - flat) ** 2, axis=-1)
    d_top = np.sum((top - flat) ** 2, axis=-1)
    boundary = np.where((d_curve <= d_top)[:, None], curve, top)

    out = np.where(inside[:, None], flat, boundary)
    return out.reshape(w.shape)
