"""Parameter models for the q-orthogonal polynomials."""

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator


class PolyParams(BaseModel):
    """Degree and the real parameter (alpha for Laguerre, lambda for Gegenbauer)."""

    model_config = ConfigDict(frozen=True)

    family: str = Field(description="hermite, laguerre_q2, laguerre_q2inv or gegenbauer")
    degree: int = Field(ge=0)
    parameter: float = Field(default=0.0, description="alpha or lambda; ignored for hermite")

    @model_validator(mode="after")
    def _check_laguerre_alpha(self) -> Self:
        if self.family.startswith("laguerre") and self.parameter <= -1.0:
            msg = f"q-Laguerre polynomials need alpha > -1, got {self.parameter}"
            raise ValueError(msg)
        return self
