"""Domain descriptor models."""

from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..geometry import Box, ConvexDomain, CurvedDomain, Interval, Simplex, ZeroSumHyperplane

DomainKind = Literal["simplex", "box", "interval", "curved", "zero_sum"]


class DomainSpec(BaseModel):
    """Serializable description of a convex domain; `build()` makes the live object."""
    model_config = ConfigDict(frozen=True)

    kind: DomainKind = Field("simplex", description="Domain family")
    d: int = Field(2, ge=1, description="Dimension")
    alpha: float = Field(3.0, description="Curvature exponent of the curved domain")
    lo: Optional[List[float]] = Field(None, description="Lower corner (box, interval)")
    hi: Optional[List[float]] = Field(None, description="Upper corner (box, interval)")

    @model_validator(mode="before")
    @classmethod
    def _fill_defaults(cls, data):
        if not isinstance(data, dict):
            return data
        data = {k: v for k, v in data.items() if v is not None}
        kind = data.get("kind")
        if kind == "interval":
            data.setdefault("d", 1)
            data.setdefault("lo", [-1.0])
            data.setdefault("hi", [1.0])
        elif kind == "curved":
            data.setdefault("d", 2)
        elif kind == "box" and "lo" in data:
            data.setdefault("d", len(data["lo"]))
        return data

    @model_validator(mode="after")
    def _check_shape(self):
        if self.kind == "curved":
            if self.d != 2:
                raise ValueError("curved domain lives in R^2")
            if not self.alpha > 2.0:
                raise ValueError("curved domain needs alpha > 2")
        if self.kind in ("box", "interval"):
            if self.lo is None or self.hi is None:
                raise ValueError(f"{self.kind} needs lo and hi")
            if len(self.lo) != self.d or len(self.hi) != self.d:
                raise ValueError(f"{self.kind} corners must have dimension {self.d}")
            if any(a > b for a, b in zip(self.lo, self.hi)):
                raise ValueError("lo must not exceed hi")
        if self.kind == "interval" and self.d != 1:
            raise ValueError("interval is one-dimensional")
        return self

    @classmethod
    def simplex(cls, d: int) -> "DomainSpec":
        return cls(kind="simplex", d=d)

    @classmethod
    def interval(cls, lo: float = -1.0, hi: float = 1.0) -> "DomainSpec":
        return cls(kind="interval", lo=[lo], hi=[hi])

    @classmethod
    def curved(cls, alpha: float = 3.0) -> "DomainSpec":
        return cls(kind="curved", alpha=alpha)

    def build(self) -> ConvexDomain:
        """Create the domain object."""
        if self.kind == "simplex":
            return Simplex(self.d)
        if self.kind == "interval":
            return Interval(self.lo[0], self.hi[0])
        if self.kind == "box":
            return Box(self.lo, self.hi)
        if self.kind == "curved":
            return CurvedDomain(self.alpha)
        return ZeroSumHyperplane(self.d)
