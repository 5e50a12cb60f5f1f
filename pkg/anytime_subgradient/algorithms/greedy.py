"""Greedy Subgradient: y_{n+1} = x_n - (eta / sqrt(n)) a_n, x_{n+1} = P(y_{n+1})."""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..geometry import ConvexDomain, Point
from .lazy import check_cost, check_eta


@dataclass(frozen=True)
class GreedyState:
    """State after playing current_action = x_turn."""
    eta: float
    turn: int
    current_action: Point
    domain: ConvexDomain
    iterate: Optional[Point] = None


def greedy_init(domain: ConvexDomain, eta: float, batch_shape: Tuple[int, ...] = ()) -> Tuple[GreedyState, Point]:
    """Start at x_1 = P(0)."""
    eta = check_eta(eta)
    x = domain.project(np.zeros(tuple(batch_shape) + (domain.dimension,)))
    return GreedyState(eta=eta, turn=1, current_action=x, domain=domain), x


def greedy_step(state: GreedyState, cost) -> Tuple[GreedyState, Point]:
    """Step from the last action against its cost, then project."""
    cost = check_cost(cost, state.current_action)
    y = state.current_action - (state.eta / math.sqrt(state.turn)) * cost
    x = state.domain.project(y)
    new = GreedyState(eta=state.eta, turn=state.turn + 1, current_action=x, domain=state.domain, iterate=y)
    return new, x
