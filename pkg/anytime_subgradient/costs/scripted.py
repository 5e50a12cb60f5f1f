"""Scripted (file-backed) cost sequences.

Format: UTF-8 text, one cost vector per line, comma-separated decimals,
lines starting with ``#`` and blank lines ignored.
"""

import logging
from pathlib import Path
from typing import List

from ..errors import CsvFormatError
from ..models import CostModel

logger = logging.getLogger(__name__)


def parse_scripted_costs(text: str, source: str = "<costs>") -> List[List[float]]:
    """Parse scripted cost text into a list of vectors of equal dimension."""
    rows: List[List[float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            row = [float(f) for f in line.split(",")]
        except ValueError as e:
            raise CsvFormatError(f"{source}:{lineno}: {e}") from e
        if rows and len(row) != len(rows[0]):
            raise CsvFormatError(
                f"{source}:{lineno}: expected {len(rows[0])} fields, got {len(row)}"
            )
        rows.append(row)
    if not rows:
        raise CsvFormatError(f"{source}: no cost vectors")
    return rows


def load_scripted_costs(path) -> CostModel:
    """Load a scripted cost file as a CostModel."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise OSError(f"cannot read cost file {path}: {e}") from e
    rows = parse_scripted_costs(text, source=str(path))
    logger.info(f"Loaded {len(rows)} scripted cost vectors from {path}")
    return CostModel.scripted(rows)


def format_scripted_costs(points) -> str:
    """Render vectors in the scripted format."""
    return "".join(",".join(repr(float(v)) for v in p) + "\n" for p in points)
