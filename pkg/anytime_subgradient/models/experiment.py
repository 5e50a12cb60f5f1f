"""Experiment configuration model."""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .costs import CostModel
from .domain import DomainSpec

Algorithm = Literal["lazy", "greedy", "ftl"]
RecordLevel = Literal["summary", "per_turn"]


class ExperimentConfig(BaseModel):
    """
    One Monte-Carlo experiment: a learner, a domain, a cost stream, a horizon and a trial count.

    (seed, trial index) fixes every random draw of a trial.
    """
    model_config = ConfigDict(frozen=True)

    algorithm: Algorithm = Field("lazy", description="Learner")
    domain: DomainSpec = Field(..., description="Action domain")
    costs: CostModel = Field(..., description="Cost stream")
    eta: float = Field(1.0, gt=0.0, description="Step parameter")
    horizon: int = Field(..., ge=1, description="Turns per trial (N)")
    trials: int = Field(1, ge=1, description="Independent trials")
    seed: int = Field(0, ge=0, lt=2 ** 64, description="Master seed")
    record_level: RecordLevel = Field("summary", description="summary or per_turn")

    @model_validator(mode="after")
    def _check_combination(self):
        if self.costs.dimension != self.domain.d:
            raise ValueError(
                f"cost dimension {self.costs.dimension} does not match domain dimension {self.domain.d}"
            )
        if self.algorithm == "ftl" and self.domain.kind != "simplex":
            raise ValueError("FTL is only supported on the simplex")
        if self.domain.kind == "zero_sum":
            raise ValueError("experiments need a compact domain")
        return self

    def with_radius(self, radius: float) -> "ExperimentConfig":
        """Validated copy with a different sphere-noise radius."""
        return self.replace(costs={**self.costs.model_dump(), "radius": float(radius)})

    def replace(self, **changes) -> "ExperimentConfig":
        """Validated copy with some fields changed."""
        return type(self).model_validate({**self.model_dump(), **changes})

    def describe(self) -> str:
        return (
            f"{self.algorithm} on {self.domain.kind}(d={self.domain.d}) "
            f"costs={self.costs.kind} eta={self.eta:g} N={self.horizon} "
            f"trials={self.trials} seed={self.seed}"
        )
