"""Point validation helpers.

A point is a float64 numpy array whose last axis holds the coordinates.
Leading axes, when present, index independent points (a batch).
"""

from typing import Optional

import numpy as np
import numpy.typing as npt

from ..errors import InvalidInputError

Point = npt.NDArray[np.float64]


def as_points(values, dim: Optional[int] = None) -> Point:
    """
    Convert values to a validated float64 array of points.

    Args:
        values: Scalar, sequence or array; scalars become 1-dimensional points
        dim: Required size of the last axis (optional)

    Returns:
        Array with at least one axis

    Raises:
        InvalidInputError: empty last axis, non-finite entries or wrong dimension
    """
    try:
        arr = np.asarray(values, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise InvalidInputError(f"not a numeric point: {e}") from e

    if arr.ndim == 0:
        arr = arr.reshape(1)
    if arr.shape[-1] == 0:
        raise InvalidInputError("point dimension must be at least 1")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError("point has non-finite coordinates")
    if dim is not None and arr.shape[-1] != dim:
        raise InvalidInputError(f"expected dimension {dim}, got {arr.shape[-1]}")
    return arr


def parse_point(text: str) -> Point:
    """Parse a comma-separated list of decimals such as ``"2,0"``."""
    fields = [f.strip() for f in text.split(",")]
    if not fields or any(not f for f in fields):
        raise InvalidInputError(f"malformed point: {text!r}")
    try:
        return as_points([float(f) for f in fields])
    except ValueError as e:
        raise InvalidInputError(f"malformed point: {text!r}") from e


def format_point(point: Point) -> str:
    """Format a point as comma-separated shortest decimals (``1,0``)."""
    return ",".join(format(float(v), ".15g") for v in np.ravel(point))
