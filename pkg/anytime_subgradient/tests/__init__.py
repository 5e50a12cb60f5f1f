"""Tests for anytime-subgradient."""
