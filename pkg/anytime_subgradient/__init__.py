"""Anytime Subgradient - lazy online convex optimisation with regret accounting."""

__version__ = "0.1.0"
