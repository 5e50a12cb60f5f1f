"""Monte-Carlo aggregation over independently seeded trials."""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from ..errors import TrialError
from ..models import ExperimentConfig
from ..monitoring import MetricsCollector
from .trial import BatchResult, simulate_batch

logger = logging.getLogger(__name__)

DEFAULT_CHUNK = 100

QUANTILES = (0.05, 0.5, 0.95)


@dataclass
class AggregateResult:
    """
    Per-turn statistics of the cumulative metric across trials.

    `metric` is pseudo_regret for streams with a known mean and regret for
    scripted streams. `instant` keeps the per-trial increments only when
    the run asked for per-turn records.
    """
    metric: str
    turns: np.ndarray
    mean: np.ndarray
    quantile05: np.ndarray
    median: np.ndarray
    quantile95: np.ndarray
    finals: np.ndarray
    trial_indices: List[int] = field(default_factory=list)
    instant: Optional[np.ndarray] = None
    snap_turns: List[Optional[int]] = field(default_factory=list)
    bound_violations: int = 0
    certificate_failures: int = 0
    runtime: Dict = field(default_factory=dict)

    @property
    def trials(self) -> int:
        return len(self.finals)

    @property
    def horizon(self) -> int:
        return len(self.turns)

    @property
    def final_mean(self) -> float:
        return float(self.finals.mean()) if self.trials else math.nan

    @property
    def final_stderr(self) -> float:
        """Standard error of the mean final value; 0 for a single trial."""
        if self.trials < 2:
            return 0.0
        return float(self.finals.std(ddof=1) / math.sqrt(self.trials))

    def cumulative(self) -> np.ndarray:
        """Per-trial cumulative curves (trials, N); needs per-turn records."""
        if self.instant is None:
            raise ValueError("per-turn records were not kept; run with record_level=per_turn")
        return np.cumsum(self.instant, axis=1)

    @classmethod
    def empty(cls, metric: str = "pseudo_regret") -> "AggregateResult":
        nothing = np.empty(0)
        return cls(
            metric=metric,
            turns=np.empty(0, dtype=np.int64),
            mean=nothing,
            quantile05=nothing,
            median=nothing,
            quantile95=nothing,
            finals=nothing,
        )

    @classmethod
    def from_increments(cls, metric: str, increments: np.ndarray, **kwargs) -> "AggregateResult":
        """Aggregate a (trials, N) matrix of per-turn increments."""
        curves = np.cumsum(increments, axis=1)
        q05, q50, q95 = np.quantile(curves, QUANTILES, axis=0)
        return cls(
            metric=metric,
            turns=np.arange(1, curves.shape[1] + 1),
            mean=curves.mean(axis=0),
            quantile05=q05,
            median=q50,
            quantile95=q95,
            finals=curves[:, -1].copy(),
            **kwargs,
        )


def trial_chunks(trials: int, chunk_size: int) -> List[List[int]]:
    """Split 0..trials-1 into consecutive chunks."""
    chunk_size = max(1, int(chunk_size))
    return [list(range(s, min(s + chunk_size, trials))) for s in range(0, trials, chunk_size)]


def _failing_trial(config, indices, keep_turns, checkpoints, error: Exception) -> TrialError:
    """Replay a failed chunk one trial at a time to find the trial that fails."""
    for index in indices:
        try:
            simulate_batch(config, [index], keep_turns=keep_turns, checkpoints=checkpoints)
        except Exception as e:
            return TrialError(index, e)
    return TrialError(indices[0], error)


def _run_chunk(job) -> BatchResult:
    config, indices, keep_turns, checkpoints = job
    try:
        return simulate_batch(config, indices, keep_turns=keep_turns, checkpoints=checkpoints)
    except TrialError:
        raise
    except Exception as e:
        if len(indices) == 1:
            raise TrialError(indices[0], e) from e
        raise _failing_trial(config, indices, keep_turns, checkpoints, e) from e


def execute_chunks(
    config: ExperimentConfig,
    chunks: Sequence[Sequence[int]],
    workers: int = 1,
    keep_turns: bool = True,
    checkpoints: Optional[Sequence[int]] = None,
) -> List[BatchResult]:
    """
    Run chunks of trials, in worker processes when workers > 1.

    Results come back in chunk order, which is trial-index order.
    """
    jobs = [(config, list(c), keep_turns, list(checkpoints) if checkpoints is not None else None) for c in chunks]
    if workers <= 1 or len(jobs) <= 1:
        return [_run_chunk(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as executor:
        return list(executor.map(_run_chunk, jobs))


def merge_metrics(results: Sequence[BatchResult], label: str) -> MetricsCollector:
    collector = MetricsCollector(label=label)
    for result in results:
        if result.metrics is not None:
            collector.merge(result.metrics)
    collector.finish()
    return collector


def run_monte_carlo(
    config: ExperimentConfig,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK,
) -> AggregateResult:
    """
    Run all trials of `config` and aggregate their cumulative curves.

    Trials are merged by index, so results do not depend on `workers` or
    `chunk_size`.

    Raises:
        TrialError: a trial failed; carries the index of the failing trial
    """
    logger.info(f"Monte-Carlo run: {config.describe()}")
    results = execute_chunks(config, trial_chunks(config.trials, chunk_size), workers=workers)

    instant = np.concatenate([r.instant for r in results], axis=0)
    metric = "pseudo_regret" if config.costs.mean_vector() is not None else "regret"
    collector = merge_metrics(results, config.algorithm)
    aggregate = AggregateResult.from_increments(
        metric,
        instant,
        trial_indices=[i for r in results for i in r.trial_indices],
        instant=instant if config.record_level == "per_turn" else None,
        snap_turns=[t for r in results for t in r.snap_turns],
        bound_violations=sum(r.bound_violations for r in results),
        certificate_failures=sum(r.certificate_failures for r in results),
        runtime=collector.get_summary(),
    )
    logger.info(
        f"{aggregate.trials} trials done: mean final {metric} {aggregate.final_mean:.6g} "
        f"(stderr {aggregate.final_stderr:.3g})"
    )
    return aggregate
