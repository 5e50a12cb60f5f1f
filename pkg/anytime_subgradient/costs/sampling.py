"""Sampling of stochastic and scripted cost vectors."""

import logging
from typing import Optional

import numpy as np

from ..errors import InvalidParameterError, StreamExhaustedError
from ..geometry import Point
from ..models import CostModel
from .rng import RngStream

logger = logging.getLogger(__name__)


def sample_sphere(d: int, rng: RngStream, size: Optional[int] = None) -> Point:
    """
    Draw uniformly from the unit sphere in R^d.

    Independent standard normals are normalised to unit length, which gives
    a rotation-invariant distribution.

    Args:
        d: Ambient dimension, d >= 2
        rng: Stream to draw from
        size: Number of samples; None for a single point

    Returns:
        Array of shape (d,) or (size, d)
    """
    if d < 2:
        raise InvalidParameterError(f"sphere sampling needs d >= 2, got {d}")
    shape = (d,) if size is None else (int(size), d)
    u = rng.generator.standard_normal(shape)
    return u / np.linalg.norm(u, axis=-1, keepdims=True)


def draw_costs(model: CostModel, rng: RngStream, n: int) -> Point:
    """
    Draw the next n cost vectors of a stream as an (n, d) array.

    Scripted streams replay from the stream cursor and raise
    StreamExhaustedError when fewer than n vectors remain.
    """
    n = int(n)
    if model.kind == "scripted":
        start = rng.cursor
        if start + n > len(model.points):
            raise StreamExhaustedError(
                f"scripted stream has {len(model.points)} vectors, turn {start + n} requested"
            )
        out = np.array(model.points[start:start + n], dtype=np.float64).reshape(n, model.dimension)
    elif model.kind == "sphere_noise":
        mean = model.mean_vector()
        if model.radius == 0.0:
            out = np.tile(mean, (n, 1))
        else:
            out = mean + model.radius * sample_sphere(mean.shape[0], rng, size=n)
    else:
        u = rng.generator.random(n)
        if model.kind == "curved_example":
            b = np.where(u < 0.5, 1.0, -1.0)
            out = np.stack([b, np.ones(n)], axis=-1)
        else:
            s = np.where(u < 0.75, 1.0, -1.0)
            out = s[:, None] if model.kind == "greedy_example" else np.stack([s, -s], axis=-1)
    rng.cursor += n
    return out


def next_cost(model: CostModel, rng: RngStream) -> Point:
    """Draw a single cost vector; see `draw_costs`."""
    return draw_costs(model, rng, 1)[0]
