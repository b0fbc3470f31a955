"""Models returned by the sphere integrals."""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field


SphereMethod = Literal["direct", "pizzetti"]
SpaceMode = Literal["infinite", "ball"]


class SphereIntegralResult(BaseModel):
    """Value of a quantum-sphere integral.

    Only the k = 0 block contributes; ``k0_mass`` is its radial profile at
    x^2 = 1 and ``value`` is that mass times the integral of 1.
    """

    model_config = ConfigDict(frozen=True)

    value: float
    k0_mass: float
    nonzero_blocks_dropped: int = Field(ge=0, description="Blocks with k >= 1, which integrate to zero")
    method: SphereMethod = "direct"
