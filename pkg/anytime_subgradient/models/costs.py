"""Cost model descriptors."""

import math
from typing import List, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

CostKind = Literal[
    "sphere_noise",
    "curved_example",
    "greedy_example",
    "greedy_example_simplex",
    "scripted",
]

STOCHASTIC_KINDS = ("sphere_noise", "curved_example", "greedy_example", "greedy_example_simplex")


class CostModel(BaseModel):
    """
    Description of a cost stream.

    - sphere_noise: a + R N_n with N_n uniform on the unit sphere
    - curved_example: (B, 1) with B = +-1 equiprobable
    - greedy_example: scalar +1 w.p. 3/4, -1 w.p. 1/4
    - greedy_example_simplex: (s, -s) for the same scalar s, on the 2-simplex
    - scripted: a fixed list of vectors replayed in order

    The randomness itself comes from the RngStream a stream is drawn with.
    """
    model_config = ConfigDict(frozen=True)

    kind: CostKind = Field("sphere_noise", description="Cost model family")
    mean: Optional[List[float]] = Field(None, description="Mean vector a (sphere_noise)")
    radius: float = Field(0.0, ge=0.0, description="Noise radius R (sphere_noise)")
    points: Optional[List[List[float]]] = Field(None, description="Scripted cost vectors")

    @model_validator(mode="after")
    def _check_kind(self):
        if self.kind == "sphere_noise":
            if not self.mean:
                raise ValueError("sphere_noise needs a mean vector")
            if not all(math.isfinite(v) for v in self.mean):
                raise ValueError("mean must be finite")
            if self.radius > 0 and len(self.mean) < 2:
                raise ValueError("sphere noise needs dimension >= 2")
        if self.kind == "scripted":
            if not self.points:
                raise ValueError("scripted model needs at least one cost vector")
            dims = {len(p) for p in self.points}
            if len(dims) != 1 or 0 in dims:
                raise ValueError("scripted cost vectors must share one positive dimension")
            if not all(math.isfinite(v) for p in self.points for v in p):
                raise ValueError("scripted costs must be finite")
        return self

    @classmethod
    def sphere_noise(cls, mean, radius: float) -> "CostModel":
        return cls(kind="sphere_noise", mean=[float(v) for v in mean], radius=radius)

    @classmethod
    def curved_example(cls) -> "CostModel":
        return cls(kind="curved_example")

    @classmethod
    def greedy_example(cls, simplex: bool = False) -> "CostModel":
        return cls(kind="greedy_example_simplex" if simplex else "greedy_example")

    @classmethod
    def scripted(cls, points) -> "CostModel":
        return cls(kind="scripted", points=[[float(v) for v in p] for p in points])

    @property
    def is_stochastic(self) -> bool:
        return self.kind in STOCHASTIC_KINDS

    @property
    def dimension(self) -> int:
        if self.kind == "sphere_noise":
            return len(self.mean)
        if self.kind == "scripted":
            return len(self.points[0])
        return 1 if self.kind == "greedy_example" else 2

    def mean_vector(self) -> Optional[np.ndarray]:
        """Expected cost a, or None for scripted (adversarial) streams."""
        if self.kind == "sphere_noise":
            return np.array(self.mean, dtype=np.float64)
        if self.kind == "curved_example":
            return np.array([0.0, 1.0])
        if self.kind == "greedy_example":
            return np.array([0.5])
        if self.kind == "greedy_example_simplex":
            return np.array([0.5, -0.5])
        return None

    def noise_bound(self) -> Optional[float]:
        """R2 with ||a_n - a|| <= R2 for every sample."""
        if self.kind == "sphere_noise":
            return self.radius
        if self.kind == "curved_example":
            return 1.0
        if self.kind == "greedy_example":
            return 1.5
        if self.kind == "greedy_example_simplex":
            return 1.5 * math.sqrt(2.0)
        return None

    def cost_bound(self) -> float:
        """L2 with ||a_n|| <= L2 for every sample (||a|| + R for sphere noise)."""
        if self.kind == "sphere_noise":
            return float(np.linalg.norm(self.mean)) + self.radius
        if self.kind == "scripted":
            return float(max(np.linalg.norm(p) for p in self.points))
        if self.kind == "greedy_example":
            return 1.0
        return math.sqrt(2.0)
