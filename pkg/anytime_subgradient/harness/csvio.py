"""CSV tables for runs and sweeps.

Floats are written with repr, so reading a table back gives the same
values bit for bit.
"""

import csv
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import IO, List, Optional, Tuple, Union

import numpy as np

from ..errors import CsvFormatError, InvalidParameterError
from .montecarlo import AggregateResult
from .studies import GrowthResult, SweepTable

logger = logging.getLogger(__name__)

PER_TURN_HEADER = ["trial", "turn", "instant_pseudo_regret", "cumulative_pseudo_regret"]
SWEEP_HEADER = ["R", "trial", "final_pseudo_regret"]
SUMMARY_HEADER = ["turn", "mean", "quantile05", "median", "quantile95"]

TABLES = ("summary", "per_turn")


def _num(value) -> str:
    return repr(float(value))


def _writer(stream: IO[str]):
    return csv.writer(stream, lineterminator="\n")


def write_summary(result: AggregateResult, stream: IO[str]) -> None:
    writer = _writer(stream)
    writer.writerow(SUMMARY_HEADER)
    for row in zip(result.turns, result.mean, result.quantile05, result.median, result.quantile95):
        writer.writerow([int(row[0])] + [_num(v) for v in row[1:]])


def write_per_turn(result: AggregateResult, stream: IO[str]) -> None:
    """One row per (trial, turn); the run must have kept per-turn records."""
    writer = _writer(stream)
    writer.writerow(PER_TURN_HEADER)
    if result.trials == 0:
        return
    curves = result.cumulative()
    for trial, increments, cumulative in zip(result.trial_indices, result.instant, curves):
        for turn, (inst, cum) in enumerate(zip(increments, cumulative), start=1):
            writer.writerow([trial, turn, _num(inst), _num(cum)])


def write_sweep(table: SweepTable, stream: IO[str]) -> None:
    writer = _writer(stream)
    writer.writerow(SWEEP_HEADER)
    for radius, trial, final in table.rows:
        writer.writerow([_num(radius), trial, _num(final)])


def write_table(result: Union[AggregateResult, SweepTable, GrowthResult], stream: IO[str], table: Optional[str] = None) -> None:
    """Write a sweep or growth table, or the summary / per_turn table of a run."""
    if isinstance(result, GrowthResult):
        write_growth(result, stream)
    elif isinstance(result, SweepTable):
        write_sweep(result, stream)
    elif (table or "summary") == "summary":
        write_summary(result, stream)
    elif table == "per_turn":
        write_per_turn(result, stream)
    else:
        raise InvalidParameterError(f"unknown table {table!r}; choose from {TABLES}")


def emit_csv(result: Union[AggregateResult, SweepTable, GrowthResult], path, table: Optional[str] = None) -> None:
    """
    Write a result table to `path`.

    Raises:
        OSError: the file cannot be written; the message names the path
    """
    path = Path(path)
    try:
        with open(path, "w", encoding="utf-8", newline="") as f:
            write_table(result, f, table)
    except OSError as e:
        raise OSError(f"cannot write {path}: {e}") from e
    logger.info(f"wrote {path}")


@dataclass
class SummaryTable:
    turns: np.ndarray
    mean: np.ndarray
    quantile05: np.ndarray
    median: np.ndarray
    quantile95: np.ndarray


def _rows(source, header: List[str]) -> List[List[str]]:
    if isinstance(source, (str, Path)):
        try:
            with open(source, "r", encoding="utf-8", newline="") as f:
                return _rows(f, header)
        except OSError as e:
            raise OSError(f"cannot read {source}: {e}") from e
    rows = list(csv.reader(source))
    if not rows or rows[0] != header:
        raise CsvFormatError(f"expected header {','.join(header)}")
    body = rows[1:]
    for lineno, row in enumerate(body, start=2):
        if len(row) != len(header):
            raise CsvFormatError(f"line {lineno}: expected {len(header)} fields, got {len(row)}")
    return body


def _parse(lineno: int, text: str, kind):
    try:
        return kind(text)
    except ValueError:
        raise CsvFormatError(f"line {lineno}: bad value {text!r}") from None


def read_summary(source) -> SummaryTable:
    """Read a summary table from a path or text stream."""
    body = _rows(source, SUMMARY_HEADER)
    turns = np.array([_parse(i, r[0], int) for i, r in enumerate(body, start=2)], dtype=np.int64)
    cols = np.array([[_parse(i, v, float) for v in r[1:]] for i, r in enumerate(body, start=2)]).reshape(len(body), 4)
    return SummaryTable(turns, cols[:, 0], cols[:, 1], cols[:, 2], cols[:, 3])


def read_sweep(source) -> List[Tuple[float, int, float]]:
    body = _rows(source, SWEEP_HEADER)
    return [(_parse(i, r[0], float), _parse(i, r[1], int), _parse(i, r[2], float)) for i, r in enumerate(body, start=2)]


def read_per_turn(source) -> List[Tuple[int, int, float, float]]:
    body = _rows(source, PER_TURN_HEADER)
    return [
        (_parse(i, r[0], int), _parse(i, r[1], int), _parse(i, r[2], float), _parse(i, r[3], float))
        for i, r in enumerate(body, start=2)
    ]


GROWTH_HEADER = ["horizon", "mean", "stderr"]


def write_growth(result: GrowthResult, stream: IO[str]) -> None:
    writer = _writer(stream)
    writer.writerow(GROWTH_HEADER)
    for horizon, mean, stderr in zip(result.horizons, result.mean, result.stderr):
        writer.writerow([int(horizon), _num(mean), _num(stderr)])
