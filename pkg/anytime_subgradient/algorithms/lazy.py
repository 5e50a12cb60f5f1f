"""Lazy anytime Subgradient.

Turn 1 plays x_1 = P(0). On turn n >= 2 the learner has seen a_1..a_{n-1}
and plays x_n = P(y_n) with y_n = -eta (a_1 + ... + a_{n-1}) / sqrt(n-1).
"""

import math
from dataclasses import dataclass, replace
from typing import Tuple

import numpy as np

from ..errors import InvalidInputError, InvalidParameterError, NotYetDefinedError
from ..geometry import ConvexDomain, Point, as_points


@dataclass(frozen=True)
class LazyState:
    """State after playing x_turn; cum_cost holds a_1 + ... + a_{turn-1}."""
    eta: float
    turn: int
    cum_cost: Point
    domain: ConvexDomain


def check_eta(eta: float) -> float:
    eta = float(eta)
    if not math.isfinite(eta) or eta <= 0.0:
        raise InvalidParameterError(f"eta must be positive, got {eta}")
    return eta


def check_cost(cost, like: Point) -> Point:
    """Validate a cost vector (or batch) against the running state array."""
    cost = as_points(cost)
    if cost.shape != like.shape:
        raise InvalidInputError(f"cost shape {cost.shape} does not match state shape {like.shape}")
    return cost


def lazy_init(domain: ConvexDomain, eta: float, batch_shape: Tuple[int, ...] = ()) -> Tuple[LazyState, Point]:
    """
    Start the learner.

    Args:
        domain: Action domain
        eta: Step parameter, eta > 0
        batch_shape: Leading shape for running independent copies in lockstep

    Returns:
        (state at turn 1, first action P(0))
    """
    eta = check_eta(eta)
    zero = np.zeros(tuple(batch_shape) + (domain.dimension,))
    state = LazyState(eta=eta, turn=1, cum_cost=zero, domain=domain)
    return state, domain.project(zero)


def unprojected_iterate(state: LazyState) -> Point:
    """y_n = -eta G_{n-1} / sqrt(n-1) for the current turn n >= 2."""
    if state.turn < 2:
        raise NotYetDefinedError("the unprojected iterate starts at turn 2")
    return (-state.eta * state.cum_cost) / math.sqrt(state.turn - 1)


def lazy_step(state: LazyState, cost) -> Tuple[LazyState, Point]:
    """
    Receive the cost of the current turn and choose the next action.

    Returns:
        (state at turn + 1, action x_{turn+1})
    """
    cost = check_cost(cost, state.cum_cost)
    new = replace(state, turn=state.turn + 1, cum_cost=state.cum_cost + cost)
    return new, state.domain.project(unprojected_iterate(new))
