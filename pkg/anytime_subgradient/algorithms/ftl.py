"""Follow-the-Leader on the simplex."""

from dataclasses import dataclass, replace
from typing import Tuple

import numpy as np

from ..errors import UnsupportedError
from ..geometry import ConvexDomain, Point, Simplex
from .lazy import check_cost


@dataclass(frozen=True)
class FtlState:
    turn: int
    cum_cost: Point
    domain: ConvexDomain


def ftl_init(domain: ConvexDomain, batch_shape: Tuple[int, ...] = ()) -> Tuple[FtlState, Point]:
    """Start with an all-zero history, which selects e_1."""
    if not isinstance(domain, Simplex):
        raise UnsupportedError(f"FTL is only supported on the simplex, not {domain.kind}")
    zero = np.zeros(tuple(batch_shape) + (domain.dimension,))
    return FtlState(turn=1, cum_cost=zero, domain=domain), domain.minimize_linear(zero)


def ftl_step(state: FtlState, cost) -> Tuple[FtlState, Point]:
    """Play the vertex with the smallest cumulative cost (smallest index on ties)."""
    if not isinstance(state.domain, Simplex):
        raise UnsupportedError(f"FTL is only supported on the simplex, not {state.domain.kind}")
    cost = check_cost(cost, state.cum_cost)
    new = replace(state, turn=state.turn + 1, cum_cost=state.cum_cost + cost)
    return new, state.domain.minimize_linear(new.cum_cost)
