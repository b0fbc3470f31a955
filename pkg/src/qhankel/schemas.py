"""Models for q-Hankel transforms and the radial functions they act on."""

from collections.abc import Callable
from typing import Annotated, Literal
try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.qcore.schemas import JacksonSpec, QContext
from src.qcore.service import exp_big, exp_small
from src.qpolys.service import laguerre_q2


# Sample radii (in units of the Gaussian width) used to validate closed forms
SAMPLE_FRACTIONS = (0.0, 0.15, 0.4, 0.7)


class HankelSpec(BaseModel):
    """Order, scale and grid of one q-Hankel transform.

    ``scale`` is beta for the first (finite) transform and gamma for the second
    (infinite) one. ``grid`` overrides the adaptive infinite Jackson grid.
    """

    model_config = ConfigDict(frozen=True)

    nu: float = Field(ge=-0.5, description="Transform order")
    scale: float = Field(default=1.0, gt=0.0, description="beta (first transform) or gamma (second)")
    grid: JacksonSpec | None = Field(default=None, description="Explicit grid for the second transform")


class LaguerreBlock(BaseModel):
    """coef * L_j^(order)(beta r^2/mu | q^2) E_{q^2}(-beta r^2/mu)."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["laguerre_block"] = "laguerre_block"
    j: int = Field(ge=0)
    order: float = Field(gt=-1.0)
    beta: float = Field(gt=0.0)
    coef: float = 1.0

    def closed_form(self, ctx: QContext, r: float) -> float:
        """Evaluate the block at r."""
        u = self.beta * r * r / ctx.mu
        return self.coef * laguerre_q2(ctx, self.j, self.order, u) * exp_big(ctx, -u, base=ctx.q * ctx.q)

    def width(self, ctx: QContext) -> float:
        """Radius of the outermost E-zero, sqrt(mu/((1-q^2) beta))."""
        return (ctx.mu / ((1.0 - ctx.q * ctx.q) * self.beta)) ** 0.5


class MonomialGaussian(BaseModel):
    """coef * t^{2j} e_{q^2}(-alpha q^2 t^2/mu)."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["monomial_gaussian"] = "monomial_gaussian"
    j: int = Field(ge=0)
    alpha: float = Field(gt=0.0)
    coef: float = 1.0

    def closed_form(self, ctx: QContext, t: float) -> float:
        """Evaluate the block at t."""
        p = ctx.q * ctx.q
        return self.coef * t ** (2 * self.j) * exp_small(ctx, -self.alpha * p * t * t / ctx.mu, base=p)

    def width(self, ctx: QContext) -> float:
        """Characteristic radius sqrt(mu/alpha)."""
        return (ctx.mu / self.alpha) ** 0.5


class Opaque(BaseModel):
    """No closed form is known."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["opaque"] = "opaque"


KnownForm = Annotated[LaguerreBlock | MonomialGaussian | Opaque, Field(discriminator="kind")]


class RadialFunction(BaseModel):
    """A real function of the radius together with its closed form, when one is known.

    The constructor checks the evaluator against the closed form on a few
    sample radii.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ctx: QContext
    evaluator: Callable[[float], float]
    known_form: KnownForm = Field(default_factory=Opaque)
    checked: bool = Field(default=True, description="Skip the sample-grid check when False")

    @model_validator(mode="after")
    def _check_known_form(self) -> Self:
        if isinstance(self.known_form, Opaque) or not self.checked:
            return self
        width = self.known_form.width(self.ctx)
        for fraction in SAMPLE_FRACTIONS:
            r = fraction * width
            expected = self.known_form.closed_form(self.ctx, r)
            actual = self.evaluator(r)
            if abs(actual - expected) > 1e-8 * max(1.0, abs(expected)):
                msg = f"evaluator disagrees with {self.known_form.kind} at r={r}: {actual} != {expected}"
                raise ValueError(msg)
        return self

    def __call__(self, x: float) -> float:
        return self.evaluator(x)

    def exact(self, x: float) -> float:
        """Closed form when known, evaluator otherwise."""
        if isinstance(self.known_form, Opaque):
            return self.evaluator(x)
        return self.known_form.closed_form(self.ctx, x)

    @classmethod
    def from_form(cls, ctx: QContext, form: LaguerreBlock | MonomialGaussian) -> "RadialFunction":
        """Build a radial function whose evaluator is its own closed form."""
        return cls(ctx=ctx, evaluator=lambda x: form.closed_form(ctx, x), known_form=form, checked=False)
