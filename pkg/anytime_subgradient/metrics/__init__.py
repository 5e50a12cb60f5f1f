"""Regret accounting, bound calculators, snap certificates and growth fits."""

from ..costs.gaps import GapProfile, gaps
from .records import RunRecord
from .regret import comparator, instant_pseudo_regret, instant_regret, pseudo_regret, regret
from .bounds import (
    adversarial_bound_value,
    bound_adversarial,
    bound_pseudo_regret,
    bound_tail,
    empirical_comparator,
    pseudo_regret_bound_for,
    pseudo_regret_special,
    tail_probability,
    tail_threshold,
    tail_validity_floor,
    tilde_bounds,
    tilde_constants,
)
from .certificates import CertificateReport, certificate_turn, on_optimal_face, snap_certificate, snap_turn
from .fitting import fit_loglog_slope

__all__ = [
    "GapProfile",
    "gaps",
    "RunRecord",
    "comparator",
    "instant_pseudo_regret",
    "instant_regret",
    "pseudo_regret",
    "regret",
    "adversarial_bound_value",
    "bound_adversarial",
    "bound_pseudo_regret",
    "bound_tail",
    "empirical_comparator",
    "pseudo_regret_bound_for",
    "pseudo_regret_special",
    "tail_probability",
    "tail_threshold",
    "tail_validity_floor",
    "tilde_bounds",
    "tilde_constants",
    "CertificateReport",
    "certificate_turn",
    "on_optimal_face",
    "snap_certificate",
    "snap_turn",
    "fit_loglog_slope",
]
