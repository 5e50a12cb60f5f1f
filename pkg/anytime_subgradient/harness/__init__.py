"""Experiment orchestration: trials, Monte-Carlo runs, sweeps, growth studies and CSV output."""

from ..metrics import RunRecord
from .trial import BatchResult, run_trial, simulate_batch
from .montecarlo import DEFAULT_CHUNK, AggregateResult, run_monte_carlo, trial_chunks
from .studies import GrowthResult, SweepTable, growth_study, sweep_noise
from .presets import GROWTH_SCENARIOS, PRESETS, preset_config, scenario_config
from .csvio import (
    PER_TURN_HEADER,
    GROWTH_HEADER,
    SUMMARY_HEADER,
    SWEEP_HEADER,
    SummaryTable,
    emit_csv,
    read_per_turn,
    read_summary,
    read_sweep,
    write_table,
)

__all__ = [
    "RunRecord",
    "BatchResult",
    "run_trial",
    "simulate_batch",
    "DEFAULT_CHUNK",
    "AggregateResult",
    "run_monte_carlo",
    "trial_chunks",
    "GrowthResult",
    "SweepTable",
    "growth_study",
    "sweep_noise",
    "PRESETS",
    "GROWTH_SCENARIOS",
    "preset_config",
    "scenario_config",
    "PER_TURN_HEADER",
    "GROWTH_HEADER",
    "SUMMARY_HEADER",
    "SWEEP_HEADER",
    "SummaryTable",
    "emit_csv",
    "read_per_turn",
    "read_summary",
    "read_sweep",
    "write_table",
]
