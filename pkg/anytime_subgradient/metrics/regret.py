"""Regret and pseudo-regret accounting.

All functions take the turn axis second to last, so (N, d) for one trial
and (..., N, d) for a batch.
"""

from typing import Optional

import numpy as np

from ..errors import InvalidInputError
from ..geometry import ConvexDomain, Point, Simplex, as_points


def _check_turns(costs: np.ndarray, actions: np.ndarray) -> None:
    if costs.ndim < 2 or costs.shape != actions.shape:
        raise InvalidInputError(
            f"costs and actions must have equal (..., N, d) shapes, got {costs.shape} and {actions.shape}"
        )


def comparator(domain: ConvexDomain, cost) -> Point:
    """Best fixed action x* for a (cumulative or mean) linear cost."""
    return domain.minimize_linear(cost)


def instant_regret(costs, actions, domain: ConvexDomain) -> np.ndarray:
    """Per-turn terms b_i . (x_i - x*) against the hindsight comparator of the whole sequence."""
    costs = np.asarray(costs, dtype=np.float64)
    actions = np.asarray(actions, dtype=np.float64)
    _check_turns(costs, actions)
    x_star = comparator(domain, costs.sum(axis=-2))
    return (costs * (actions - x_star[..., None, :])).sum(axis=-1)


def regret(costs, actions, domain: ConvexDomain) -> float:
    """
    Regret sum_i b_i . (x_i - x*) with x* minimising the cumulative linear cost.

    Args:
        costs: Cost vectors, (N, d) or batched (..., N, d)
        actions: Played actions, same shape
        domain: Domain supplying the comparator

    Returns:
        Scalar regret (array over the batch axes when batched)
    """
    out = instant_regret(costs, actions, domain).sum(axis=-1)
    return float(out) if np.ndim(out) == 0 else out


def instant_pseudo_regret(mean, actions, domain: Optional[ConvexDomain] = None) -> np.ndarray:
    """Per-turn gaps a . (x_i - x*) where x* minimises a (best vertex by default)."""
    mean = as_points(mean)
    actions = np.asarray(actions, dtype=np.float64)
    if actions.ndim < 1 or actions.shape[-1] != mean.shape[-1]:
        raise InvalidInputError(f"actions of shape {actions.shape} do not match mean of dimension {mean.shape[-1]}")
    domain = domain or Simplex(mean.shape[-1])
    x_star = comparator(domain, mean)
    return ((actions - x_star) * mean).sum(axis=-1)


def pseudo_regret(mean, actions, domain: Optional[ConvexDomain] = None) -> float:
    """Pseudo-regret sum_i a . (x_i - x*) of an action sequence."""
    out = instant_pseudo_regret(mean, actions, domain).sum(axis=-1)
    return float(out) if np.ndim(out) == 0 else out
