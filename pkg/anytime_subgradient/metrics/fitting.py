"""Power-law growth fitting."""

from typing import Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from ..errors import InsufficientDataError, InvalidInputError

MIN_POINTS = 3


def fit_loglog_slope(
    turn_indices: Sequence[int],
    values: Sequence[float],
    window: Optional[Tuple[float, float]] = None,
) -> float:
    """
    Least-squares slope of log(value) against log(n).

    Args:
        turn_indices: Turn numbers n >= 1
        values: Observations at those turns
        window: Inclusive [n_lo, n_hi]; all points when None

    Raises:
        InsufficientDataError: fewer than 3 points in the window
        InvalidInputError: non-positive values in the window
    """
    n = np.asarray(turn_indices, dtype=np.float64)
    v = np.asarray(values, dtype=np.float64)
    if n.shape != v.shape or n.ndim != 1:
        raise InvalidInputError(f"turns and values must be equal-length lists, got {n.shape} and {v.shape}")

    if window is not None:
        lo, hi = window
        keep = (n >= lo) & (n <= hi)
        n, v = n[keep], v[keep]
    if n.size < MIN_POINTS:
        raise InsufficientDataError(f"slope fit needs at least {MIN_POINTS} points, got {n.size}")
    if np.any(v <= 0.0) or np.any(n <= 0.0):
        raise InvalidInputError("log-log fit needs positive turns and values")

    return float(stats.linregress(np.log(n), np.log(v)).slope)
