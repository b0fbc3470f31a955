"""Pydantic models threaded through every q-computation."""

from typing import Literal
try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator


class SeriesPolicy(BaseModel):
    """Termination policy for infinite series and products."""

    model_config = ConfigDict(frozen=True)

    rel_tol: float = Field(default=1e-14, gt=0.0, description="Relative size below which a term counts as negligible")
    max_terms: int = Field(default=500, ge=1, description="Hard cap before a truncation error is raised")
    consecutive_small: int = Field(default=3, ge=1, description="Negligible terms in a row that end a series")


class QContext(BaseModel):
    """Deformation parameter, dimension and precision policy.

    ``frame="quantum"`` is the quantum Euclidean space with mu = 1 + q^(2-m).
    ``frame="euclidean"`` keeps the classical space with mu = 1 + q, under which
    the same radial transforms become the q-Fourier pair of the undeformed space.
    """

    model_config = ConfigDict(frozen=True)

    q: float = Field(gt=0.0, lt=1.0, description="Deformation parameter")
    m: int = Field(default=3, ge=1, description="Dimension")
    frame: Literal["quantum", "euclidean"] = Field(default="quantum", description="Which normalization mu follows")
    precision: SeriesPolicy = Field(default_factory=SeriesPolicy)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def mu(self) -> float:
        """Normalization constant of the Laplacian and of every transform."""
        if self.frame == "euclidean":
            return 1.0 + self.q
        return 1.0 + self.q ** (2 - self.m)

    @property
    def mu_bar(self) -> float:
        """The constant of the barred calculus, 1 + q^(m-2)."""
        return 1.0 + self.q ** (self.m - 2)

    def with_precision(self, rel_tol: float) -> Self:
        """Return a copy with a different relative tolerance."""
        policy = self.precision.model_copy(update={"rel_tol": rel_tol})
        return self.model_copy(update={"precision": policy})


class JacksonSpec(BaseModel):
    """Grid of an infinite Jackson integral, points q^k * gamma for k_lo <= k <= k_hi.

    A bound left as ``None`` is chosen adaptively at run time.
    """

    model_config = ConfigDict(frozen=True)

    gamma: float = Field(default=1.0, gt=0.0, description="Anchor of the geometric grid")
    k_hi: int | None = Field(default=None, description="Finest index (small t)")
    k_lo: int | None = Field(default=None, description="Coarsest index (large t), usually negative")

    @model_validator(mode="after")
    def _check_bounds(self) -> Self:
        if self.k_lo is not None and self.k_hi is not None and self.k_lo > self.k_hi:
            msg = f"k_lo={self.k_lo} must be <= k_hi={self.k_hi}"
            raise ValueError(msg)
        return self


class JacksonResult(BaseModel):
    """Outcome of an infinite Jackson sum."""

    model_config = ConfigDict(frozen=True)

    value: float
    tail_estimate: float = Field(description="Magnitude of the last shells summed on either side")
    k_lo: int
    k_hi: int
    decayed: bool = Field(description="False when the coarse side never became negligible")
