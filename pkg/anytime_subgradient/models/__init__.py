"""Data models for experiments, domains, cost streams and bound reports."""

from .domain import DomainSpec
from .costs import CostModel
from .experiment import ExperimentConfig
from .reports import BoundReport
from .config_file import load_config_file, parse_config_text, config_from_mapping

__all__ = [
    "DomainSpec",
    "CostModel",
    "ExperimentConfig",
    "BoundReport",
    "load_config_file",
    "parse_config_text",
    "config_from_mapping",
]
