"""Models for oscillator eigenblocks."""

from pydantic import BaseModel, ConfigDict, Field

from src.fischer.schemas import GaussTag
from src.qcore.schemas import QContext


class OscBlock(BaseModel):
    """Index of one Laguerre eigenblock S_k P_j(x^2) times a Gaussian.

    Unbarred blocks carry e_{q^2}(-q^{-N} u/mu) and barred blocks
    E_{q^2}(-q^{N+2} u/mu), with N = k + 2j + m/2.
    """

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=0, description="Harmonic degree")
    j: int = Field(ge=0, description="Laguerre index")
    barred: bool = False

    @property
    def n(self) -> int:
        """Total degree k + 2j, which fixes the eigenvalue."""
        return self.k + 2 * self.j

    def gauss(self, ctx: QContext) -> GaussTag:
        """Gaussian of the block; the two scales are exchanged by the Fourier transform."""
        exponent = self.n + ctx.m / 2 + 2
        if self.barred:
            return GaussTag(type="e_big", scale=ctx.q**exponent)
        return GaussTag(type="e_small", scale=ctx.q ** (-exponent))


class FourierEigencheck(BaseModel):
    """Comparison of F^{+-} applied to an unbarred block with the barred block of the same index.

    ``ratio`` is the least-squares scalar between the two radial profiles with
    the ground-state factor q^{m^2/4} divided out; ``phase`` collects the
    transform's quarter turns and the sign of ``ratio``.
    """

    model_config = ConfigDict(frozen=True)

    k: int
    j: int
    sign: int
    phase: int = Field(description="Observed quarter turns")
    expected_phase: int = Field(description="Quarter turns of (+-i)^{k+2j}")
    ratio: float
    residual: float = Field(ge=0.0, description="Radial gap relative to the largest coefficient")

    @property
    def phase_ok(self) -> bool:
        return self.phase == self.expected_phase
