"""Radial series and Fischer-block elements.

A ``FischerElement`` stores, for each harmonic degree k, the radial profile
psi(u), u = x^2, of a block S_k(x) psi(x^2). No basis of the harmonics is ever
materialized.
"""

from typing import Literal
try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.qcore.schemas import QContext, SeriesPolicy


GaussType = Literal["none", "e_small", "e_big"]


class GaussTag(BaseModel):
    """Gaussian factor of a radial series.

    ``e_small`` with scale alpha is e_{q^2}(-alpha q^2 u/mu); ``e_big`` with
    scale beta is E_{q^2}(-beta u/mu); ``none`` is the constant 1.
    """

    model_config = ConfigDict(frozen=True)

    type: GaussType = "none"
    scale: float = Field(default=1.0, gt=0.0)

    @model_validator(mode="after")
    def _normalize_plain(self) -> Self:
        if self.type == "none" and self.scale != 1.0:
            return self.model_copy(update={"scale": 1.0})
        return self


PLAIN = GaussTag()


class RadialSeries(BaseModel):
    """sum_l coeffs[l] u^l times a Gaussian, times the unit i^phase.

    ``valid_to`` is the highest power whose coefficient is exact after a
    truncated Gaussian expansion; ``None`` means the series is exact.
    """

    model_config = ConfigDict(frozen=True)

    coeffs: tuple[float, ...] = ()
    gauss: GaussTag = PLAIN
    phase: int = Field(default=0, description="Quarter turns: the block is multiplied by i^phase")
    valid_to: int | None = None

    @field_validator("coeffs")
    @classmethod
    def _trim_trailing_zeros(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        end = len(value)
        while end and value[end - 1] == 0.0:
            end -= 1
        return tuple(float(c) for c in value[:end])

    @field_validator("phase")
    @classmethod
    def _reduce_phase(cls, value: int) -> int:
        return value % 4

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def unit(self) -> complex:
        """The phase as a complex number."""
        return (1, 1j, -1, -1j)[self.phase]

    def coefficient(self, power: int) -> float:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0.0


class FischerElement(BaseModel):
    """Sparse map from harmonic degree k to the radial series of that block."""

    model_config = ConfigDict(frozen=True)

    ctx: QContext
    blocks: dict[int, RadialSeries] = Field(default_factory=dict)

    @field_validator("blocks")
    @classmethod
    def _drop_empty(cls, value: dict[int, RadialSeries]) -> dict[int, RadialSeries]:
        for k in value:
            if k < 0:
                msg = f"harmonic degree must be >= 0, got {k}"
                raise ValueError(msg)
        return {k: value[k] for k in sorted(value) if not value[k].is_zero}

    @property
    def is_zero(self) -> bool:
        return not self.blocks

    def block(self, k: int) -> RadialSeries:
        """Series of degree-k block, empty when absent."""
        return self.blocks.get(k, RadialSeries())

    def with_blocks(self, blocks: dict[int, RadialSeries]) -> "FischerElement":
        return FischerElement(ctx=self.ctx, blocks=blocks)

    def to_document(self) -> "FischerDocument":
        """Serializable form with the fixed CLI field names."""
        return FischerDocument(
            m=self.ctx.m,
            q=self.ctx.q,
            blocks=[
                BlockDocument(
                    k=k,
                    gauss=GaussDocument(type=s.gauss.type, scale=s.gauss.scale),
                    coeffs=list(s.coeffs),
                    phase=s.phase,
                )
                for k, s in self.blocks.items()
            ],
        )

    @classmethod
    def from_document(cls, document: "FischerDocument", precision: SeriesPolicy | None = None) -> "FischerElement":
        """Rebuild an element; each harmonic degree may appear once."""
        ctx = QContext(q=document.q, m=document.m, precision=precision or SeriesPolicy())
        blocks: dict[int, RadialSeries] = {}
        for entry in document.blocks:
            if entry.k in blocks:
                msg = f"duplicate block for harmonic degree {entry.k}"
                raise ValueError(msg)
            blocks[entry.k] = RadialSeries(
                coeffs=tuple(entry.coeffs),
                gauss=GaussTag(type=entry.gauss.type, scale=entry.gauss.scale),
                phase=entry.phase,
            )
        return cls(ctx=ctx, blocks=blocks)


class GaussDocument(BaseModel):
    type: GaussType = "none"
    scale: float = 1.0


class BlockDocument(BaseModel):
    k: int = Field(ge=0)
    gauss: GaussDocument = Field(default_factory=GaussDocument)
    coeffs: list[float]
    phase: int = Field(default=0, ge=0, le=3)


class FischerDocument(BaseModel):
    """JSON document {m, q, blocks: [{k, gauss: {type, scale}, coeffs, phase}]}."""

    m: int
    q: float
    blocks: list[BlockDocument] = Field(default_factory=list)
