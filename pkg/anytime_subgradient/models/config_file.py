"""Flat key-value experiment config files."""

import logging
from pathlib import Path
from typing import Dict, Mapping, Optional

from ..errors import CsvFormatError
from ..geometry import parse_point
from .costs import CostModel
from .domain import DomainSpec
from .experiment import ExperimentConfig

logger = logging.getLogger(__name__)

CONFIG_KEYS = (
    "algorithm", "domain", "alpha", "d", "eta", "mean", "R", "N", "trials",
    "seed", "record_level", "model", "lo", "hi", "costs_file",
)


def parse_config_text(text: str, source: str = "<config>") -> Dict[str, str]:
    """
    Parse ``key = value`` lines (``key: value`` also accepted).

    Blank lines and lines starting with ``#`` are ignored.

    Raises:
        CsvFormatError: malformed line or unknown key
    """
    values: Dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        sep = "=" if "=" in line else ":"
        key, found, value = line.partition(sep)
        key, value = key.strip(), value.strip()
        if not found or not key:
            raise CsvFormatError(f"{source}:{lineno}: expected 'key = value'")
        if key not in CONFIG_KEYS:
            raise CsvFormatError(f"{source}:{lineno}: unknown key {key!r}")
        values[key] = value
    return values


def load_config_file(path) -> Dict[str, str]:
    """Read a config file into a raw key-value mapping."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise OSError(f"cannot read config file {path}: {e}") from e
    logger.debug(f"Loaded config file {path}")
    return parse_config_text(text, source=str(path))


def _list(value) -> Optional[list]:
    if value is None or isinstance(value, (list, tuple)):
        return value
    return parse_point(str(value)).tolist()


def config_from_mapping(values: Mapping[str, object]) -> ExperimentConfig:
    """
    Build an ExperimentConfig from flat keys (file values or CLI flags).

    Missing keys take the ExperimentConfig defaults; pydantic performs the
    validation and raises ValidationError on bad values.
    """
    values = {k: v for k, v in values.items() if v is not None}
    kind = str(values.get("model", "sphere_noise"))

    if kind == "scripted":
        from ..costs.scripted import load_scripted_costs

        if "costs_file" not in values:
            raise CsvFormatError("scripted model needs costs_file")
        costs = load_scripted_costs(values["costs_file"])
    else:
        costs = CostModel(kind=kind, mean=_list(values.get("mean")), radius=values.get("R", 0.0))

    domain = DomainSpec(
        kind=values.get("domain", "simplex"),
        d=values.get("d", costs.dimension),
        alpha=values.get("alpha"),
        lo=_list(values.get("lo")),
        hi=_list(values.get("hi")),
    )
    config = {
        "algorithm": values.get("algorithm"),
        "eta": values.get("eta"),
        "horizon": values.get("N"),
        "trials": values.get("trials"),
        "seed": values.get("seed"),
        "record_level": values.get("record_level"),
    }
    return ExperimentConfig(
        domain=domain,
        costs=costs,
        **{k: v for k, v in config.items() if v is not None},
    )
