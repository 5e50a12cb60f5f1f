"""Suboptimality gaps of a mean cost vector."""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..geometry import as_points

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GapProfile:
    """
    Gaps Delta_j = a(sigma(j)) - a(sigma(1)) for the ascending sort sigma of a.

    The permutation belongs to the analysis only; learners never see it.
    """
    permutation: np.ndarray
    sorted_gaps: np.ndarray
    min_positive_gap: Optional[float]

    @property
    def defined(self) -> bool:
        return self.min_positive_gap is not None

    @property
    def best_index(self) -> int:
        return int(self.permutation[0])

    @property
    def mean_gap(self) -> float:
        """Average gap over all d coordinates (including Delta_1 = 0)."""
        return float(np.mean(self.sorted_gaps))

    @property
    def levels(self) -> np.ndarray:
        """Distinct positive gaps in increasing order."""
        return np.unique(self.sorted_gaps[self.sorted_gaps > 0.0])

    def coordinate_gaps(self) -> np.ndarray:
        """Gap of each coordinate in the original order."""
        out = np.empty_like(self.sorted_gaps)
        out[self.permutation] = self.sorted_gaps
        return out


def gaps(a) -> GapProfile:
    """
    Compute the gap profile of a mean cost vector.

    Ties in the sort keep the smaller index first, so sigma(1) is the
    smallest-index minimiser. An all-zero profile leaves the gap undefined.
    """
    a = as_points(a)
    perm = np.argsort(a, kind="stable")
    sorted_gaps = a[perm] - a[perm[0]]
    positive = sorted_gaps[sorted_gaps > 0.0]
    min_gap = float(positive[0]) if positive.size else None
    if min_gap is None:
        logger.warning("All gaps are zero; the minimum positive gap is undefined")
    return GapProfile(permutation=perm, sorted_gaps=sorted_gaps, min_positive_gap=min_gap)
