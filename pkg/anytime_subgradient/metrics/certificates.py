"""Snap certificates for the lazy learner on the simplex.

After n turns with n >= 9 / (gap_j^2 eta^2) and empirical mean error
||a - (a_1 + ... + a_n) / n||_inf <= gap_j / 3, the next action puts zero
mass on every coordinate whose gap is at least gap_j.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ..costs.gaps import GapProfile
from ..errors import UnsupportedError
from ..geometry import Simplex
from .records import RunRecord

logger = logging.getLogger(__name__)

# Mass at or below this counts as zero.
ZERO_TOL = 1e-12


def certificate_turn(
    n,
    cum_cost: np.ndarray,
    next_action: np.ndarray,
    mean: np.ndarray,
    profile: GapProfile,
    eta: float,
    tol: float = ZERO_TOL,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Check the snap condition after turn n.

    The strongest level whose hypothesis holds decides which coordinates
    must vanish in x_{n+1}. When no level qualifies the conclusion is
    still evaluated at the smallest gap, for information only.

    Args:
        n: Turns seen (scalar or broadcastable to the batch shape)
        cum_cost: a_1 + ... + a_n, shape (..., d)
        next_action: x_{n+1}, shape (..., d)
        mean: Mean cost a, shape (d,)
        profile: Gap profile of the mean
        eta: Step parameter

    Returns:
        (hypothesis_holds, conclusion_holds) boolean arrays over the batch shape
    """
    batch = cum_cost.shape[:-1]
    levels = profile.levels
    if levels.size == 0:
        return np.zeros(batch, dtype=bool), np.ones(batch, dtype=bool)

    n = np.asarray(n, dtype=np.float64)
    err = np.abs(mean - cum_cost / n[..., None]).max(axis=-1)
    holds = (n[..., None] >= 9.0 / (levels ** 2 * eta ** 2)) & (err[..., None] <= levels / 3.0)
    hypothesis = holds.any(axis=-1)

    level = levels[np.where(hypothesis, holds.argmax(axis=-1), 0)]
    must_vanish = profile.coordinate_gaps() >= level[..., None]
    conclusion = np.all(~must_vanish | (next_action <= tol), axis=-1)
    return hypothesis, conclusion


def on_optimal_face(actions: np.ndarray, profile: GapProfile, tol: float = ZERO_TOL) -> np.ndarray:
    """True where an action puts no mass on suboptimal coordinates."""
    suboptimal = profile.coordinate_gaps() > 0.0
    return np.all(~suboptimal | (actions <= tol), axis=-1)


def snap_turn(actions: np.ndarray, profile: GapProfile, tol: float = ZERO_TOL) -> Optional[int]:
    """
    First turn from which every later action stays on the optimal face.

    None if the last action is still off the face.
    """
    on_face = on_optimal_face(actions, profile, tol)
    off = np.flatnonzero(~on_face)
    if off.size == 0:
        return 1
    last = int(off[-1]) + 1
    return None if last == len(on_face) else last + 1


@dataclass(frozen=True)
class CertificateReport:
    """Per-turn flags for turns n = 1..N-1 (x_{n+1} must be recorded)."""
    hypothesis: np.ndarray
    conclusion: np.ndarray
    snap_turn: Optional[int]

    @property
    def violations(self) -> int:
        """Turns where the hypothesis held but the conclusion failed."""
        return int(np.count_nonzero(self.hypothesis & ~self.conclusion))

    @property
    def first_certified_turn(self) -> Optional[int]:
        hits = np.flatnonzero(self.hypothesis)
        return int(hits[0]) + 1 if hits.size else None

    def as_pairs(self) -> List[Tuple[bool, bool]]:
        return [(bool(h), bool(c)) for h, c in zip(self.hypothesis, self.conclusion)]


def snap_certificate(record: RunRecord, profile: GapProfile, eta: float) -> CertificateReport:
    """
    Evaluate the snap certificate on every turn of a lazy run.

    Raises:
        UnsupportedError: adversarial run without a mean, or a non-simplex domain
    """
    if record.mean is None:
        raise UnsupportedError("snap certificates need a stochastic run with a known mean")
    if not isinstance(record.domain, Simplex):
        raise UnsupportedError(f"snap certificates are defined on the simplex, not {record.domain.kind}")

    turns = np.arange(1, record.horizon, dtype=np.float64)
    cum = np.cumsum(record.costs, axis=0)[:-1]
    hypothesis, conclusion = certificate_turn(turns, cum, record.actions[1:], record.mean, profile, eta)
    report = CertificateReport(
        hypothesis=hypothesis,
        conclusion=conclusion,
        snap_turn=snap_turn(record.actions, profile),
    )
    if report.violations:
        logger.error(f"trial {record.trial_index}: snap certificate failed on {report.violations} turns")
    return report
