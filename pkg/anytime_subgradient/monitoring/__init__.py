"""Monitoring for harness runs."""

from .metrics import MetricsCollector, RunMetrics

__all__ = [
    "MetricsCollector",
    "RunMetrics",
]
