"""Trial engine: plays a learner against a cost stream, many trials in lockstep."""

import logging
import time
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from ..algorithms import make_learner
from ..costs import RngStream, draw_costs, gaps
from ..geometry import Simplex
from ..metrics import RunRecord, adversarial_bound_value, certificate_turn, on_optimal_face
from ..models import ExperimentConfig
from ..monitoring import MetricsCollector

logger = logging.getLogger(__name__)

# Cost vectors are drawn this many turns at a time per trial.
BLOCK_TURNS = 1024

# Slack for the pathwise regret bound comparison.
BOUND_ATOL = 1e-9


@dataclass
class BatchResult:
    """Outputs of one lockstep batch, rows ordered like `trial_indices`."""
    trial_indices: List[int]
    finals: np.ndarray
    instant: Optional[np.ndarray] = None
    checkpoints: Optional[np.ndarray] = None
    snap_turns: List[Optional[int]] = field(default_factory=list)
    records: List[RunRecord] = field(default_factory=list)
    bound_violations: int = 0
    certificate_failures: int = 0
    metrics: Optional[MetricsCollector] = None


def simulate_batch(
    config: ExperimentConfig,
    trial_indices: Sequence[int],
    keep_turns: bool = True,
    checkpoints: Optional[Sequence[int]] = None,
    keep_paths: bool = False,
) -> BatchResult:
    """
    Run the trials `trial_indices` of `config` side by side.

    Each trial owns the random stream (seed, trial index), so a trial's
    outputs do not depend on which batch it runs in.

    Tracked per turn n:
    - the pseudo-regret increment a . (x_n - x*) when the mean is known,
      otherwise the increment of the realised regret against the best
      fixed action of the prefix
    - for the lazy learner, the realised regret against the pathwise bound
      evaluated at the largest cost norm seen so far
    - for the lazy learner on the simplex, the snap certificate

    Args:
        config: Experiment to run
        trial_indices: Trials to run; each seeds its own stream
        keep_turns: Keep the (B, N) per-turn increments
        checkpoints: Turns at which to record the cumulative metric
        keep_paths: Keep full trajectories as RunRecords

    Returns:
        BatchResult
    """
    started = time.time()
    indices = [int(i) for i in trial_indices]
    batch, horizon = len(indices), config.horizon
    domain = config.domain.build()
    learner = make_learner(config.algorithm, domain, config.eta)
    model = config.costs
    mean = model.mean_vector()
    streams = [RngStream(config.seed, i) for i in indices]

    profile = gaps(mean) if mean is not None and isinstance(domain, Simplex) else None
    track_snap = profile is not None and profile.defined
    certify = track_snap and config.algorithm == "lazy"
    check_bound = config.algorithm == "lazy"
    x_star = domain.minimize_linear(mean) if mean is not None else None
    diameter, max_norm = domain.diameter, domain.max_norm

    ck = np.array(sorted(checkpoints), dtype=np.int64) if checkpoints is not None else np.empty(0, dtype=np.int64)
    ck_values = np.empty((batch, ck.size))
    ck_pos = 0

    d = domain.dimension
    instant = np.empty((batch, horizon)) if keep_turns else None
    if keep_paths:
        path_costs = np.empty((horizon, batch, d))
        path_unprojected = np.full((horizon, batch, d), np.nan)
        path_actions = np.empty((horizon, batch, d))

    state, x = learner.init((batch,))
    cum_cost = np.zeros((batch, d))
    paid = np.zeros(batch)
    realised = np.zeros(batch)
    total = np.zeros(batch)
    largest_cost = np.zeros(batch)
    last_off_face = np.zeros(batch, dtype=np.int64)
    bound_violations = certificate_failures = certificate_hits = certificate_checks = 0

    for start in range(0, horizon, BLOCK_TURNS):
        m = min(BLOCK_TURNS, horizon - start)
        block = np.stack([draw_costs(model, s, m) for s in streams], axis=1)
        for k in range(m):
            n = start + k + 1
            a = block[k]
            if keep_paths:
                y = learner.iterate(state)
                path_costs[n - 1] = a
                path_actions[n - 1] = x
                if y is not None:
                    path_unprojected[n - 1] = y

            paid += (a * x).sum(axis=-1)
            cum_cost += a
            previous = realised
            realised = paid - (cum_cost * domain.minimize_linear(cum_cost)).sum(axis=-1)
            if x_star is not None:
                step = ((x - x_star) * mean).sum(axis=-1)
            else:
                step = realised - previous
            total += step
            if keep_turns:
                instant[:, n - 1] = step
            while ck_pos < ck.size and ck[ck_pos] == n:
                ck_values[:, ck_pos] = total
                ck_pos += 1

            if check_bound:
                largest_cost = np.maximum(largest_cost, np.sqrt((a * a).sum(axis=-1)))
                bound = adversarial_bound_value(largest_cost, n, config.eta, diameter, max_norm)
                bound_violations += int(np.count_nonzero(realised > bound + BOUND_ATOL * (1.0 + np.abs(bound))))
            if track_snap:
                last_off_face = np.where(on_optimal_face(x, profile), last_off_face, n)

            state, x = learner.step(state, a)

            if certify and n < horizon:
                hypothesis, conclusion = certificate_turn(n, cum_cost, x, mean, profile, config.eta)
                certificate_checks += batch
                certificate_hits += int(np.count_nonzero(hypothesis))
                certificate_failures += int(np.count_nonzero(hypothesis & ~conclusion))

    if bound_violations:
        logger.error(f"trials {indices[0]}..{indices[-1]}: regret exceeded the pathwise bound on {bound_violations} turns")
    if certificate_failures:
        logger.error(f"trials {indices[0]}..{indices[-1]}: snap certificate failed on {certificate_failures} turns")

    snap_turns: List[Optional[int]] = [None] * batch
    if track_snap:
        snap_turns = [None if t == horizon else int(t) + 1 for t in last_off_face]

    records: List[RunRecord] = []
    if keep_paths:
        for b, index in enumerate(indices):
            records.append(RunRecord(
                algorithm=config.algorithm,
                eta=config.eta,
                domain=domain,
                costs=path_costs[:, b].copy(),
                unprojected=path_unprojected[:, b].copy(),
                actions=path_actions[:, b].copy(),
                mean=mean,
                seed=config.seed,
                trial_index=index,
            ))

    collector = MetricsCollector(label=config.algorithm)
    elapsed = time.time() - started
    collector.record_batch(batch, horizon, elapsed)
    collector.record_bound_checks(batch * horizon if check_bound else 0, bound_violations)
    collector.record_certificates(certificate_checks, certificate_hits, certificate_failures)
    logger.debug(f"batch of {batch} trials from {indices[0]} finished in {elapsed:.3f}s")

    return BatchResult(
        trial_indices=indices,
        finals=total,
        instant=instant,
        checkpoints=ck_values if checkpoints is not None else None,
        snap_turns=snap_turns,
        records=records,
        bound_violations=bound_violations,
        certificate_failures=certificate_failures,
        metrics=collector,
    )


def run_trial(config: ExperimentConfig, trial_index: int = 0) -> RunRecord:
    """
    Play one trial and return its full trajectory.

    Deterministic given (config.seed, trial_index).
    """
    result = simulate_batch(config, [trial_index], keep_turns=False, keep_paths=True)
    return result.records[0]
