"""Online learners: lazy anytime Subgradient, greedy Subgradient and Follow-the-Leader."""

from .lazy import LazyState, lazy_init, lazy_step, unprojected_iterate
from .greedy import GreedyState, greedy_init, greedy_step
from .ftl import FtlState, ftl_init, ftl_step
from .learners import Learner, LazySubgradient, GreedySubgradient, FollowTheLeader, make_learner

__all__ = [
    "LazyState",
    "lazy_init",
    "lazy_step",
    "unprojected_iterate",
    "GreedyState",
    "greedy_init",
    "greedy_step",
    "FtlState",
    "ftl_init",
    "ftl_step",
    "Learner",
    "LazySubgradient",
    "GreedySubgradient",
    "FollowTheLeader",
    "make_learner",
]
