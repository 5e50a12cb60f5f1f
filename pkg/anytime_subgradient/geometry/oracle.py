"""Brute-force projection oracle for testing the analytic projections."""

import itertools
import logging

import numpy as np

from ..errors import UnsupportedError
from .domains import Box, ConvexDomain, CurvedDomain, Simplex
from .points import Point, as_points

logger = logging.getLogger(__name__)

MAX_ORACLE_DIMENSION = 5
# Half-width of the zoom window, in grid steps.
ZOOM_RADIUS = 3
TERNARY_ITERATIONS = 100
# Denominator of the starting lattice for simplices with d >= 3.
LATTICE_SIZE = 8
MAX_PAIR_MOVES = 100_000


def brute_force_project(domain: ConvexDomain, w, resolution: float = 1e-4) -> Point:
    """
    Minimise ||p - w||^2 over the domain by scanning.

    One-parameter boundaries (2-simplex, intervals, curved domain) are
    scanned at the given resolution and refined by ternary search. Larger
    simplices start from the best point of the lattice {k / m} and move
    mass between coordinate pairs until no move helps. Boxes use a
    coarse-to-fine grid that halves its step until it drops below the
    resolution. Grid ties go to the smallest index.

    Args:
        domain: Simplex or box with d <= 5, or a curved domain
        w: A single point
        resolution: Scan step

    Returns:
        A point within O(resolution) of the true projection

    Raises:
        UnsupportedError: unsupported domain kind or dimension too large
    """
    w = as_points(w, dim=domain.dimension)
    if w.ndim != 1:
        raise UnsupportedError("the oracle projects one point at a time")

    if isinstance(domain, CurvedDomain):
        return _curved(domain, w, resolution)
    if not isinstance(domain, (Simplex, Box)):
        raise UnsupportedError(f"no oracle for {domain.kind} domains")
    if domain.dimension > MAX_ORACLE_DIMENSION:
        raise UnsupportedError(
            f"oracle supports d <= {MAX_ORACLE_DIMENSION}, got {domain.dimension}"
        )

    if isinstance(domain, Simplex):
        if domain.dimension == 1:
            return np.ones(1)
        if domain.dimension == 2:
            return _scan_segment(np.array([1.0, 0.0]), np.array([0.0, 1.0]), w, resolution)
        return _simplex_search(w, resolution)

    if domain.dimension == 1:
        return _scan_segment(domain.lo, domain.hi, w, resolution)
    return _zoom_box(domain, w, resolution)


def _ternary(f, lo: float, hi: float) -> float:
    for _ in range(TERNARY_ITERATIONS):
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        if f(m1) <= f(m2):
            hi = m2
        else:
            lo = m1
    return 0.5 * (lo + hi)


def _scan_segment(a: Point, b: Point, w: Point, resolution: float) -> Point:
    """Nearest point of the segment [a, b], scanning t in [0, 1]."""
    length = float(np.linalg.norm(b - a))
    steps = max(int(np.ceil(length / resolution)), 1)
    t = np.linspace(0.0, 1.0, steps + 1)
    pts = a + t[:, None] * (b - a)
    i = int(np.argmin(np.sum((pts - w) ** 2, axis=-1)))
    lo, hi = t[max(i - 1, 0)], t[min(i + 1, steps)]
    best = _ternary(lambda s: float(np.sum((a + s * (b - a) - w) ** 2)), lo, hi)
    return a + best * (b - a)


def _zoom(center: np.ndarray, step: float, resolution: float, feasible, lift, w: Point) -> Point:
    offsets = np.array(list(itertools.product(range(-ZOOM_RADIUS, ZOOM_RADIUS + 1), repeat=center.shape[0])))
    while True:
        cand = center + step * offsets
        cand = cand[feasible(cand)]
        pts = lift(cand)
        center = cand[int(np.argmin(np.sum((pts - w) ** 2, axis=-1)))]
        if step <= resolution:
            return lift(center[None, :])[0]
        step *= 0.5


def _compositions(d: int, m: int) -> np.ndarray:
    """All points k / m of the simplex with integer k >= 0 summing to m."""
    rows = []
    for cuts in itertools.combinations(range(m + d - 1), d - 1):
        bounds = (-1,) + cuts + (m + d - 1,)
        rows.append([bounds[i + 1] - bounds[i] - 1 for i in range(d)])
    return np.array(rows, dtype=np.float64) / m


def _simplex_search(w: Point, resolution: float) -> Point:
    """
    Scan the composition lattice, then move mass between coordinate pairs.

    Each move shifts the exactly optimal amount t from coordinate i to j,
    clipped to [0, x(i)]. Stops when no pair improves the squared distance
    by more than resolution^2 times a small factor.
    """
    d = w.shape[0]
    lattice = _compositions(d, LATTICE_SIZE)
    x = lattice[int(np.argmin(np.sum((lattice - w) ** 2, axis=-1)))].copy()
    tol = 1e-6 * resolution ** 2
    for _ in range(MAX_PAIR_MOVES):
        g = x - w
        # t moves mass from row i to column j
        t = np.clip(0.5 * (g[:, None] - g[None, :]), 0.0, x[:, None])
        gain = 2.0 * t * (g[:, None] - g[None, :]) - 2.0 * t ** 2
        i, j = np.unravel_index(int(np.argmax(gain)), gain.shape)
        if gain[i, j] <= tol:
            break
        x[i] -= t[i, j]
        x[j] += t[i, j]
    else:
        logger.warning("simplex oracle hit the move limit")
    return np.clip(x, 0.0, None)


def _zoom_box(box: Box, w: Point, resolution: float) -> Point:
    def feasible(q):
        return np.all((q >= box.lo) & (q <= box.hi), axis=-1)

    center = 0.5 * (box.lo + box.hi)
    step = max(float(np.max(box.hi - box.lo)) / 4.0, resolution)
    return _zoom(center, step, resolution, feasible, lambda q: q, w)


def _curved(domain: CurvedDomain, w: Point, resolution: float) -> Point:
    if domain.contains(w, tol=0.0):
        return w.copy()
    a = domain.alpha

    def curve(x):
        return np.stack([x, np.abs(x) ** a], axis=-1)

    def top(x):
        return np.stack([x, np.ones_like(x)], axis=-1)

    xs = np.linspace(-1.0, 1.0, max(int(np.ceil(2.0 / resolution)), 2) + 1)
    best = None
    for piece in (curve, top):
        dist = np.sum((piece(xs) - w) ** 2, axis=-1)
        i = int(np.argmin(dist))
        lo, hi = xs[max(i - 1, 0)], xs[min(i + 1, xs.shape[0] - 1)]
        x = _ternary(lambda s: float(np.sum((piece(np.array(s)) - w) ** 2)), lo, hi)
        p = piece(np.array(x))
        if best is None or np.sum((p - w) ** 2) < np.sum((best - w) ** 2):
            best = p
    return best
