"""Runtime counters for harness runs."""

import time
from collections import defaultdict
from dataclasses import asdict, dataclass, field
from typing import Dict, List


@dataclass
class RunMetrics:
    """Container for harness run metrics."""
    # Work metrics
    trials_completed: int = 0
    turns_simulated: int = 0
    batches_completed: int = 0

    # Safety-net metrics
    bound_checks: int = 0
    bound_violations: int = 0
    certificate_turns_checked: int = 0
    certificate_hypothesis_turns: int = 0
    certificate_failures: int = 0

    # Timing
    elapsed_seconds: float = 0.0
    last_update: float = field(default_factory=time.time)


class MetricsCollector:
    """
    Collects counters for one Monte-Carlo run.

    Worker processes fill their own collector per chunk; the parent merges
    them with `merge` so counts do not depend on the worker count.
    """

    def __init__(self, label: str = "run"):
        """
        Initialize metrics collector.

        Args:
            label: Name reported in the summary
        """
        self.label = label
        self.metrics = RunMetrics()
        self.start_time = time.time()
        self.batch_seconds: Dict[str, List[float]] = defaultdict(list)

    def record_batch(self, trials: int, turns: int, seconds: float):
        """Record a finished batch of lockstep trials."""
        self.metrics.batches_completed += 1
        self.metrics.trials_completed += trials
        self.metrics.turns_simulated += trials * turns
        self.batch_seconds["batch"].append(seconds)
        self.metrics.last_update = time.time()

    def record_bound_checks(self, checks: int, violations: int):
        """Record pathwise adversarial-bound checks."""
        self.metrics.bound_checks += checks
        self.metrics.bound_violations += violations

    def record_certificates(self, checked: int, hypothesis: int, failures: int):
        """Record snap-certificate evaluations."""
        self.metrics.certificate_turns_checked += checked
        self.metrics.certificate_hypothesis_turns += hypothesis
        self.metrics.certificate_failures += failures

    def merge(self, other: "MetricsCollector"):
        """Fold another collector's counters into this one."""
        for name, value in asdict(other.metrics).items():
            if name in ("elapsed_seconds", "last_update"):
                continue
            setattr(self.metrics, name, getattr(self.metrics, name) + value)
        for key, values in other.batch_seconds.items():
            self.batch_seconds[key].extend(values)

    def finish(self):
        self.metrics.elapsed_seconds = time.time() - self.start_time
        self.metrics.last_update = time.time()

    def get_summary(self) -> Dict:
        """
        Get summary of metrics.

        Returns:
            Dictionary with key metrics
        """
        batches = self.batch_seconds["batch"]
        elapsed = self.metrics.elapsed_seconds or (time.time() - self.start_time)
        return {
            "label": self.label,
            "trials": self.metrics.trials_completed,
            "turns": self.metrics.turns_simulated,
            "batches": self.metrics.batches_completed,
            "elapsed_seconds": elapsed,
            "mean_batch_seconds": sum(batches) / len(batches) if batches else 0.0,
            "turns_per_second": self.metrics.turns_simulated / elapsed if elapsed > 0 else 0.0,
            "bound_checks": self.metrics.bound_checks,
            "bound_violations": self.metrics.bound_violations,
            "certificate_turns_checked": self.metrics.certificate_turns_checked,
            "certificate_hypothesis_turns": self.metrics.certificate_hypothesis_turns,
            "certificate_failures": self.metrics.certificate_failures,
        }
