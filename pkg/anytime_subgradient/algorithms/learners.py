"""Uniform learner interface used by the harness."""

from abc import ABC, abstractmethod
from typing import Any, Optional, Tuple

from ..errors import InvalidParameterError
from ..geometry import ConvexDomain, Point
from .ftl import ftl_init, ftl_step
from .greedy import greedy_init, greedy_step
from .lazy import lazy_init, lazy_step, unprojected_iterate


class Learner(ABC):
    """An online learner on a fixed domain; state is passed explicitly."""

    name = "abstract"

    def __init__(self, domain: ConvexDomain, eta: float = 1.0):
        self.domain = domain
        self.eta = eta

    @abstractmethod
    def init(self, batch_shape: Tuple[int, ...] = ()) -> Tuple[Any, Point]:
        """Return the turn-1 state and action."""

    @abstractmethod
    def step(self, state: Any, cost) -> Tuple[Any, Point]:
        """Consume the cost of the current turn; return the next state and action."""

    @abstractmethod
    def iterate(self, state: Any) -> Optional[Point]:
        """Point that was projected to produce the current action, if any."""


class LazySubgradient(Learner):
    name = "lazy"

    def init(self, batch_shape=()):
        return lazy_init(self.domain, self.eta, batch_shape)

    def step(self, state, cost):
        return lazy_step(state, cost)

    def iterate(self, state):
        return unprojected_iterate(state) if state.turn >= 2 else None


class GreedySubgradient(Learner):
    name = "greedy"

    def init(self, batch_shape=()):
        return greedy_init(self.domain, self.eta, batch_shape)

    def step(self, state, cost):
        return greedy_step(state, cost)

    def iterate(self, state):
        return state.iterate


class FollowTheLeader(Learner):
    """FTL ignores eta; its recorded iterate is the negated cumulative cost."""

    name = "ftl"

    def init(self, batch_shape=()):
        return ftl_init(self.domain, batch_shape)

    def step(self, state, cost):
        return ftl_step(state, cost)

    def iterate(self, state):
        return -state.cum_cost if state.turn >= 2 else None


LEARNERS = {cls.name: cls for cls in (LazySubgradient, GreedySubgradient, FollowTheLeader)}


def make_learner(algorithm: str, domain: ConvexDomain, eta: float = 1.0) -> Learner:
    """Instantiate a learner by name (lazy, greedy, ftl)."""
    try:
        cls = LEARNERS[algorithm]
    except KeyError:
        raise InvalidParameterError(f"unknown algorithm {algorithm!r}") from None
    return cls(domain, eta)
