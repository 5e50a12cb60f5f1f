"""Cost-vector streams: sphere noise, counterexample distributions and scripted files."""

from .rng import RngStream
from .sampling import sample_sphere, draw_costs, next_cost
from .scripted import load_scripted_costs, parse_scripted_costs, format_scripted_costs
from .gaps import GapProfile, gaps

__all__ = [
    "RngStream",
    "sample_sphere",
    "draw_costs",
    "next_cost",
    "load_scripted_costs",
    "parse_scripted_costs",
    "format_scripted_costs",
    "GapProfile",
    "gaps",
]
