"""Noise sweeps and growth-rate studies."""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..costs import gaps
from ..errors import InvalidInputError, InvalidParameterError
from ..geometry.projections import check_alpha
from ..metrics import bound_pseudo_regret, empirical_comparator, fit_loglog_slope
from ..models import ExperimentConfig
from .montecarlo import DEFAULT_CHUNK, execute_chunks, merge_metrics, run_monte_carlo, trial_chunks
from .presets import scenario_config

logger = logging.getLogger(__name__)


@dataclass
class SweepTable:
    """Final pseudo-regret of every trial at every noise radius."""
    rows: List[Tuple[float, int, float]] = field(default_factory=list)
    medians: Dict[float, float] = field(default_factory=dict)
    comparators: Dict[float, Optional[float]] = field(default_factory=dict)
    bounds: Dict[float, Optional[float]] = field(default_factory=dict)

    @property
    def radii(self) -> List[float]:
        return list(self.medians)

    def finals_for(self, radius: float) -> np.ndarray:
        return np.array([v for r, _, v in self.rows if r == radius])

    @property
    def median_nondecreasing(self) -> bool:
        values = list(self.medians.values())
        return all(b >= a for a, b in zip(values, values[1:]))


def sweep_noise(
    base: ExperimentConfig,
    R_values: Sequence[float],
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK,
) -> SweepTable:
    """
    Run `base` at each sphere-noise radius and collect final pseudo-regrets.

    Every radius reuses the streams (seed, trial), so the same noise
    directions are scaled by different radii.

    Alongside the samples the table carries, per radius, the median, the
    reference line mean_gap + 0.4 R^2 / gap and the expected pseudo-regret
    bound at L2 = ||a|| + R (lazy on the simplex only).
    """
    if base.costs.kind != "sphere_noise":
        raise InvalidParameterError(f"noise sweeps need a sphere_noise model, got {base.costs.kind}")
    radii = [float(r) for r in R_values]
    if not radii:
        raise InvalidInputError("R_values is empty")
    if any(not math.isfinite(r) or r < 0.0 for r in radii):
        raise InvalidParameterError(f"R values must be finite and >= 0, got {radii}")

    mean = base.costs.mean_vector()
    profile = gaps(mean)
    table = SweepTable()
    for radius in radii:
        config = base.with_radius(radius)
        result = run_monte_carlo(config, workers=workers, chunk_size=chunk_size)
        table.rows.extend((radius, i, float(v)) for i, v in zip(result.trial_indices, result.finals))
        table.medians[radius] = float(np.median(result.finals))
        table.comparators[radius] = empirical_comparator(profile, radius) if profile.defined else None
        bound = None
        if profile.defined and base.algorithm == "lazy" and base.domain.kind == "simplex":
            L2 = float(np.linalg.norm(mean)) + radius
            bound = bound_pseudo_regret(L2, radius, profile.min_positive_gap, base.eta).bound_value
        table.bounds[radius] = bound
        logger.info(f"R={radius:g}: median final pseudo-regret {table.medians[radius]:.6g}")

    logger.info(f"median trend nondecreasing in R: {table.median_nondecreasing}")
    return table


@dataclass
class GrowthResult:
    """Mean cumulative metric at each horizon and its fitted log-log slope."""
    scenario: str
    horizons: np.ndarray
    mean: np.ndarray
    stderr: np.ndarray
    slope: float
    window: Tuple[float, float]
    trials: int


def _check_horizons(horizons: Sequence[int]) -> np.ndarray:
    h = np.asarray(list(horizons), dtype=np.int64)
    if h.ndim != 1 or h.size == 0:
        raise InvalidInputError("horizons must be a non-empty list")
    if h[0] < 1 or np.any(np.diff(h) <= 0):
        raise InvalidInputError(f"horizons must be positive and strictly ascending, got {h.tolist()}")
    return h


def largest_decade(horizons: np.ndarray) -> Tuple[float, float]:
    """[h_max / 10, h_max], or all horizons when that decade holds fewer than 3."""
    hi = float(horizons[-1])
    window = (hi / 10.0, hi)
    if np.count_nonzero(horizons >= window[0]) < 3:
        logger.warning("fewer than 3 horizons in the largest decade; fitting over all horizons")
        window = (float(horizons[0]), hi)
    return window


def growth_study(
    scenario: Optional[str] = None,
    horizons: Sequence[int] = (1000, 3000, 10000),
    trials: int = 200,
    seed: int = 0,
    alpha: float = 3.0,
    eta: float = 1.0,
    window: Optional[Tuple[float, float]] = None,
    workers: int = 1,
    config: Optional[ExperimentConfig] = None,
) -> GrowthResult:
    """
    Measure how the mean cumulative pseudo-regret grows with the horizon.

    One run of length max(horizons) per trial is read at every horizon;
    the learners never use the horizon. The slope is fitted over `window`,
    by default the largest decade of horizons.

    Args:
        scenario: curved, greedy_scalar, lazy_simplex_equivalent or sphere_simplex
        horizons: Strictly ascending horizons
        trials: Independent trials
        seed: Master seed
        alpha: Curvature exponent of the curved scenario, alpha > 2
        eta: Step parameter
        window: Inclusive [n_lo, n_hi] for the slope fit
        workers: Worker processes
        config: Explicit experiment in place of a named scenario
    """
    h = _check_horizons(horizons)
    if trials < 1:
        raise InvalidParameterError(f"trials must be >= 1, got {trials}")
    if config is None:
        if scenario is None:
            raise InvalidParameterError("growth_study needs a scenario or a config")
        if scenario == "curved":
            check_alpha(alpha)
        config = scenario_config(scenario, int(h[-1]), trials, seed=seed, alpha=alpha, eta=eta)
    else:
        config = config.replace(horizon=int(h[-1]), trials=trials)
        scenario = scenario or config.algorithm

    logger.info(f"growth study {scenario}: horizons {h.tolist()}, {trials} trials")
    chunk = max(1, math.ceil(trials / max(1, workers)))
    results = execute_chunks(config, trial_chunks(trials, chunk), workers=workers, keep_turns=False, checkpoints=h.tolist())
    values = np.concatenate([r.checkpoints for r in results], axis=0)
    mean = values.mean(axis=0)
    stderr = values.std(axis=0, ddof=1) / math.sqrt(trials) if trials > 1 else np.zeros_like(mean)

    window = window or largest_decade(h)
    slope = fit_loglog_slope(h, mean, window)
    runtime = merge_metrics(results, scenario).get_summary()
    logger.info(f"growth study {scenario}: slope {slope:.4f} over {window} in {runtime['elapsed_seconds']:.1f}s")
    return GrowthResult(
        scenario=scenario,
        horizons=h,
        mean=mean,
        stderr=stderr,
        slope=slope,
        window=(float(window[0]), float(window[1])),
        trials=trials,
    )
