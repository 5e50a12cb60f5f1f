"""Command-line interface for anytime-subgradient."""

from .main import cli, parse_and_dispatch

__all__ = ["cli", "parse_and_dispatch"]
