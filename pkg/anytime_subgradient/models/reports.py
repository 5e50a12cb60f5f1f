"""Report models for the bound calculators."""

from typing import Dict, Optional

from pydantic import BaseModel, Field


class BoundReport(BaseModel):
    """Value of a theoretical bound together with the inputs it was evaluated at."""
    name: str = Field(..., description="Which bound (adversarial, pseudo_regret, tail)")
    bound_value: float = Field(..., description="Bound evaluated at the given inputs")
    special_value: Optional[float] = Field(
        None, description="Closed-form value for the tuned step eta = 1/(2 L2)"
    )
    inputs: Dict[str, float] = Field(default_factory=dict, description="Echoed inputs")
    extra: Dict[str, float] = Field(default_factory=dict, description="Derived quantities")
    flags: Dict[str, bool] = Field(default_factory=dict, description="Validity flags")
