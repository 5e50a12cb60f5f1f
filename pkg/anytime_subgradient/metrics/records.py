"""Per-trial trajectory record."""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..errors import InvalidInputError, NotYetDefinedError
from ..geometry import ConvexDomain, Point


@dataclass(frozen=True)
class RunRecord:
    """
    Trajectory of one trial: costs a_n, unprojected points y_n and actions x_n.

    Arrays are (N, d). Row 0 of `unprojected` is NaN since y_1 does not
    exist. `mean` is None for adversarial (scripted) streams.
    """
    algorithm: str
    eta: float
    domain: ConvexDomain
    costs: np.ndarray
    unprojected: np.ndarray
    actions: np.ndarray
    mean: Optional[np.ndarray] = None
    seed: int = 0
    trial_index: int = 0

    def __post_init__(self):
        shapes = {self.costs.shape, self.unprojected.shape, self.actions.shape}
        if len(shapes) != 1 or self.costs.ndim != 2:
            raise InvalidInputError(f"record arrays must share one (N, d) shape, got {sorted(shapes)}")

    @property
    def horizon(self) -> int:
        return self.costs.shape[0]

    def turn(self, n: int) -> Tuple[Point, Optional[Point], Point]:
        """(cost, unprojected or None, action) of turn n, 1-based."""
        if not 1 <= n <= self.horizon:
            raise InvalidInputError(f"turn {n} outside 1..{self.horizon}")
        y = self.unprojected[n - 1] if n >= 2 else None
        return self.costs[n - 1], y, self.actions[n - 1]

    def unprojected_at(self, n: int) -> Point:
        if n < 2:
            raise NotYetDefinedError("the unprojected iterate starts at turn 2")
        return self.turn(n)[1]
