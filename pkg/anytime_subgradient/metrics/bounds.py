"""Calculators for the adversarial, pseudo-regret and tail bounds."""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from ..costs.gaps import GapProfile
from ..errors import InvalidInputError, InvalidParameterError, UndefinedGapError
from ..models.reports import BoundReport

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2.0)


def _positive(name: str, value: float, allow_zero: bool = False) -> float:
    value = float(value)
    ok = value >= 0.0 if allow_zero else value > 0.0
    if math.isnan(value) or not ok or math.isinf(value):
        raise InvalidParameterError(f"{name} must be {'non-negative' if allow_zero else 'positive'} and finite, got {value}")
    return value


def _gap(gap: float) -> float:
    gap = float(gap)
    if math.isnan(gap) or gap <= 0.0:
        raise UndefinedGapError(f"gap must be positive, got {gap}")
    return gap


def adversarial_bound_value(L2, N, eta, D, maxnorm, proof_variant: bool = False):
    """
    L D + (c ||X||^2 / eta + 2 eta L^2) sqrt(N), elementwise.

    c is 1/2, or 1 with `proof_variant`. No validation; used per turn by
    the trial engine with the running cost bound.
    """
    coef = 1.0 if proof_variant else 0.5
    L2 = np.asarray(L2, dtype=np.float64)
    return L2 * D + (coef * maxnorm ** 2 / eta + 2.0 * eta * L2 ** 2) * np.sqrt(N)


def bound_adversarial(
    L2: float,
    N: int,
    eta: float,
    D: float,
    maxnorm: float,
    proof_variant: bool = False,
) -> BoundReport:
    """
    Pathwise regret bound of the lazy learner against costs with ||b_n|| <= L2.

    The simplex closed form sqrt(2) L + 2 L sqrt(N) is filled in when
    ||X|| = 1, D = sqrt(2) and eta = 1/(2 L2).
    """
    L2 = _positive("L2", L2)
    eta = _positive("eta", eta)
    D = _positive("D", D)
    maxnorm = _positive("maxnorm", maxnorm)
    if N < 0:
        raise InvalidParameterError(f"N must be >= 0, got {N}")

    value = float(adversarial_bound_value(L2, N, eta, D, maxnorm, proof_variant))
    tuned = math.isclose(eta, 1.0 / (2.0 * L2), rel_tol=1e-12)
    simplex_shape = math.isclose(maxnorm, 1.0, rel_tol=1e-12) and math.isclose(D, SQRT2, rel_tol=1e-12)
    special = SQRT2 * L2 + 2.0 * L2 * math.sqrt(N) if tuned and simplex_shape else None

    return BoundReport(
        name="adversarial",
        bound_value=value,
        special_value=special,
        inputs={"L2": L2, "N": float(N), "eta": eta, "D": D, "maxnorm": maxnorm},
        flags={"proof_variant": proof_variant, "tuned_eta": tuned},
    )


def pseudo_regret_special(L2: float, R2: float, gap: float) -> float:
    """2 L + (18 L^2 + 72 R^2) / gap, the value at the tuned step eta = 1/(2 L)."""
    return 2.0 * L2 + (18.0 * L2 ** 2 + 72.0 * R2 ** 2) / gap


def bound_pseudo_regret(L2: float, R2: float, gap: float, eta: float) -> BoundReport:
    """
    Expected pseudo-regret bound of the lazy learner on the simplex.

        sqrt(2) L + (1 + 2 eta^2 L^2) L / 6
            + (3 / eta^2 + 6 L^2 + 72 R^2 exp(-1 / (2 eta^2 R^2))) / gap

    An infinite gap leaves the gap-free terms only. R2 = 0 drops the
    exponential term.
    """
    L2 = _positive("L2", L2)
    R2 = _positive("R2", R2, allow_zero=True)
    eta = _positive("eta", eta)
    gap = _gap(gap)

    noise = 72.0 * R2 ** 2 * math.exp(-1.0 / (2.0 * eta ** 2 * R2 ** 2)) if R2 > 0 else 0.0
    gap_free = SQRT2 * L2 + (1.0 + 2.0 * eta ** 2 * L2 ** 2) * L2 / 6.0
    gap_terms = (3.0 / eta ** 2 + 6.0 * L2 ** 2 + noise) / gap
    return BoundReport(
        name="pseudo_regret",
        bound_value=gap_free + gap_terms,
        special_value=pseudo_regret_special(L2, R2, gap),
        inputs={"L2": L2, "R2": R2, "gap": gap, "eta": eta},
        extra={"gap_free_terms": gap_free, "gap_terms": gap_terms, "noise_term": noise},
        flags={"tuned_eta": math.isclose(eta, 1.0 / (2.0 * L2), rel_tol=1e-12)},
    )


def tail_validity_floor(L2: float, gap: float, eta: float) -> float:
    """Smallest t for which the tail bound is stated."""
    return (3.0 / L2 ** 2) * (2.0 * L2 + SQRT2 / eta + SQRT2 * gap / 3.0) ** 2


def tail_threshold(L2: float, gap: float, t):
    return 2.0 * L2 + (L2 ** 2 / gap) * np.asarray(t, dtype=np.float64)


def tail_probability(R2: float, t):
    """(1 + 36 R^2) exp(-t / (24 R^2)); zero for noiseless streams."""
    t = np.asarray(t, dtype=np.float64)
    if R2 == 0.0:
        return np.zeros_like(t)
    return (1.0 + 36.0 * R2 ** 2) * np.exp(-t / (24.0 * R2 ** 2))


def bound_tail(L2: float, R2: float, gap: float, eta: float, t: float) -> BoundReport:
    """
    Tail bound: P(pseudo-regret > 2 L + (L^2 / gap) t) <= (1 + 36 R^2) exp(-t / (24 R^2)).

    A t below the validity floor is flagged, not rejected.
    """
    L2 = _positive("L2", L2)
    R2 = _positive("R2", R2, allow_zero=True)
    eta = _positive("eta", eta)
    gap = _gap(gap)
    t = _positive("t", t, allow_zero=True)

    floor = tail_validity_floor(L2, gap, eta)
    valid = t >= floor
    if not valid:
        logger.warning(f"t={t:g} is below the tail-bound validity floor {floor:.6g}")
    return BoundReport(
        name="tail",
        bound_value=float(tail_probability(R2, t)),
        inputs={"L2": L2, "R2": R2, "gap": gap, "eta": eta, "t": t},
        extra={"threshold": float(tail_threshold(L2, gap, t)), "validity_floor": floor},
        flags={"t_valid": valid},
    )


def tilde_constants(samples, mean) -> Tuple[float, float]:
    """
    Norms of the samples after removing their component along the all-ones vector.

    Returns:
        (L~2, R~2): max_n sqrt(||a_n||^2 - (sum_j a_n(j))^2 / d), and the same for a_n - a
    """
    samples = np.asarray(samples, dtype=np.float64)
    if samples.ndim == 1:
        samples = samples[None, :]
    if samples.size == 0:
        raise InvalidInputError("tilde constants need at least one sample")
    mean = np.asarray(mean, dtype=np.float64)
    if mean.shape != samples.shape[-1:]:
        raise InvalidInputError(f"mean of shape {mean.shape} does not match samples {samples.shape}")

    def flat_norm(v: np.ndarray) -> float:
        d = v.shape[-1]
        sq = (v * v).sum(axis=-1) - v.sum(axis=-1) ** 2 / d
        return float(np.sqrt(np.clip(sq, 0.0, None)).max())

    return flat_norm(samples), flat_norm(samples - mean)


def tilde_bounds(samples, mean, gap: float, eta: float, N: int) -> Tuple[BoundReport, BoundReport]:
    """
    Adversarial and pseudo-regret bounds on the simplex evaluated at the tilde constants.

    Only the component of the costs inside the simplex's hyperplane moves
    the lazy learner there, so the bounds hold with L~2, R~2 in place of L2, R2.
    """
    lt, rt = tilde_constants(samples, mean)
    if lt == 0.0:
        raise InvalidParameterError("all samples are constant vectors; L~2 is zero")
    adversarial = bound_adversarial(lt, N, eta, SQRT2, 1.0)
    pseudo = bound_pseudo_regret(lt, rt, gap, eta)
    for report in (adversarial, pseudo):
        report.flags["tilde"] = True
    return adversarial, pseudo


def empirical_comparator(profile: GapProfile, radius: float) -> float:
    """Reference line mean_gap + 0.4 R^2 / gap for sweep plots; never asserted."""
    if not profile.defined:
        raise UndefinedGapError("the mean cost has no positive gap")
    return profile.mean_gap + 0.4 * float(radius) ** 2 / profile.min_positive_gap


def pseudo_regret_bound_for(profile: GapProfile, L2: float, R2: float, eta: float) -> Optional[BoundReport]:
    """Pseudo-regret bound for a gap profile, or None when the gap is undefined."""
    if not profile.defined:
        return None
    return bound_pseudo_regret(L2, R2, profile.min_positive_gap, eta)
