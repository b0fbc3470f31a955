"""Models describing Bessel evaluations."""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field


BesselKind = Literal[1, 2]
Branch = Literal["auto", "series", "continuation"]


class BesselOrder(BaseModel):
    """Order of a q-Bessel function.

    Any real order can be evaluated through the scaled functions; transforms
    require nu >= -1/2.
    """

    model_config = ConfigDict(frozen=True)

    nu: float = Field(description="Order of the Bessel function")

    @property
    def transform_ready(self) -> bool:
        """True when the order is admissible as a Hankel transform order."""
        return self.nu >= -0.5


class GeneratingSum(BaseModel):
    """Partial sum of a Laguerre generating identity and the size of the first omitted term."""

    model_config = ConfigDict(frozen=True)

    bessel_side: float
    partial_sum: float
    first_omitted: float
    terms: int
