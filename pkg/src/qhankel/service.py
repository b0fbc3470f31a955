"""The two q-Hankel transforms, the normalization d(lambda, alpha) and their inversion.

The first transform integrates over the finite grid {q^k sqrt(mu/((1-q^2) beta))};
the second over an infinite Jackson grid anchored at gamma. Transform outputs
are memoized per instance and carry the closed-form image of a tagged input.
"""

import math
import time
from functools import lru_cache

from src.qbessel.service import besselJ1_scaled, besselJ2_scaled
from src.qcore.schemas import JacksonSpec, QContext
from src.qcore.service import (
    RealFunction,
    exp_big,
    exp_small,
    factorial,
    jackson_infinite,
    q_integrate_finite,
    reciprocal_gamma2,
)
from src.qhankel.schemas import HankelSpec, LaguerreBlock, MonomialGaussian, Opaque, RadialFunction
from src.qpolys.service import laguerre_q2inv
from src.shared.errors import QDomainError
from src.shared.logging import get_logger


logger = get_logger(__name__)


def euclidean(ctx: QContext) -> QContext:
    """Return the same context with mu = 1 + q."""
    return ctx.model_copy(update={"frame": "euclidean"})


def first_support(ctx: QContext, beta: float) -> float:
    """Upper limit sqrt(mu/((1-q^2) beta)) of the first transform."""
    if beta <= 0.0:
        msg = f"beta must be positive, got {beta}"
        raise QDomainError(msg)
    return math.sqrt(ctx.mu / ((1.0 - ctx.q * ctx.q) * beta))


def laguerre_block_constant(ctx: QContext, nu: float, j: int) -> float:
    """C_j = q^{2(j+1)(j+nu+1)}/([j]_{q^2}! mu^j)."""
    q = ctx.q
    return q ** (2 * (j + 1) * (j + nu + 1)) / (factorial(q * q, j) * ctx.mu**j)


# ---------------------------------------------------------------------------
# Pointwise transforms on plain callables
# ---------------------------------------------------------------------------


def hankel1_at(ctx: QContext, nu: float, beta: float, f: RealFunction, t: float) -> float:
    """Evaluate the first q-Hankel transform of ``f`` at ``t``.

    Any order nu > -1 is accepted here so that operational identities can
    reach nu - 1; the public transform enforces nu >= -1/2.
    """
    q = ctx.q
    kappa = (1.0 + q) / ctx.mu
    prefactor = kappa**nu

    def integrand(r: float) -> float:
        return prefactor * besselJ1_scaled(ctx, nu, kappa * r * t) * r ** (2 * nu + 1) * f(r)

    return kappa * q_integrate_finite(ctx, integrand, first_support(ctx, beta))


def hankel2_at(ctx: QContext, nu: float, grid: JacksonSpec, f: RealFunction, r: float) -> float:
    """Evaluate the second q-Hankel transform of ``f`` at ``r`` on the given grid."""
    q = ctx.q
    kappa = (1.0 + q) / ctx.mu
    prefactor = (q * kappa) ** nu

    def integrand(t: float) -> float:
        value = f(t)
        if value == 0.0:
            return 0.0
        return prefactor * besselJ2_scaled(ctx, nu, q * kappa * r * t) * t ** (2 * nu + 1) * value

    return kappa * jackson_infinite(ctx, integrand, grid).value


# ---------------------------------------------------------------------------
# d(lambda, alpha)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=512)
def d_const(ctx: QContext, lam: float, alpha: float) -> float:
    """Return d(lambda, alpha).

    d = q^{alpha(alpha+1)}/Gamma_{q^2}(alpha+1) int_0^{lambda^2 inf} u^alpha e_{q^2}(-u) d_{q^2}u.

    Raises:
        QDomainError: If alpha <= -1 or lambda <= 0.
    """
    if alpha <= -1.0:
        msg = f"d(lambda, alpha) needs alpha > -1, got {alpha}"
        raise QDomainError(msg)
    if lam <= 0.0:
        msg = f"d(lambda, alpha) needs lambda > 0, got {lam}"
        raise QDomainError(msg)
    p = ctx.q * ctx.q

    def integrand(u: float) -> float:
        return u**alpha * exp_small(ctx, -u, base=p)

    result = jackson_infinite(ctx, integrand, JacksonSpec(gamma=lam * lam), base=p)
    return ctx.q ** (alpha * (alpha + 1.0)) * reciprocal_gamma2(ctx, alpha + 1.0) * result.value


def inversion_constant(ctx: QContext, nu: float, alpha: float, gamma: float) -> float:
    """d(sqrt(alpha) gamma/sqrt(mu), nu), the factor by which H^gamma o H-bar^{1/alpha} scales."""
    return d_const(ctx, math.sqrt(alpha) * gamma / math.sqrt(ctx.mu), nu)


# ---------------------------------------------------------------------------
# Transforms on RadialFunction
# ---------------------------------------------------------------------------


def _memoized(compute: RealFunction) -> RealFunction:
    return lru_cache(maxsize=1024)(compute)


def _scaled(f: RadialFunction, factor: float) -> RadialFunction:
    form = f.known_form
    scaled_form = form if isinstance(form, Opaque) else form.model_copy(update={"coef": form.coef * factor})
    return RadialFunction(
        ctx=f.ctx,
        evaluator=lambda x: factor * f(x),
        known_form=scaled_form,
        checked=False,
    )


def hankel1(ctx: QContext, spec: HankelSpec, f: RadialFunction) -> RadialFunction:
    """First q-Hankel transform with beta = ``spec.scale``.

    A Laguerre block of order nu and scale beta maps to
    beta^{-(nu+1+j)} C_j t^{2j} e_{q^2}(-q^2 t^2/(mu beta)); other inputs get an
    opaque tag.
    """
    nu, beta = spec.nu, spec.scale
    form = f.known_form
    image: LaguerreBlock | MonomialGaussian | Opaque = Opaque()
    if isinstance(form, LaguerreBlock) and form.order == nu and math.isclose(form.beta, beta, rel_tol=1e-15):
        constant = beta ** (-(nu + 1 + form.j)) * laguerre_block_constant(ctx, nu, form.j)
        image = MonomialGaussian(j=form.j, alpha=1.0 / beta, coef=form.coef * constant)
    logger.debug("hankel1_prepared", nu=nu, beta=beta, image=image.kind)
    evaluator = _memoized(lambda t: hankel1_at(ctx, nu, beta, f.exact, t))
    return RadialFunction(ctx=ctx, evaluator=evaluator, known_form=image, checked=False)


def hankel2(ctx: QContext, spec: HankelSpec, f: RadialFunction) -> RadialFunction:
    """Second q-Hankel transform with gamma = ``spec.scale``.

    c C_j t^{2j} e_{q^2}(-alpha q^2 t^2/mu) maps to
    c d(sqrt(alpha) gamma/sqrt(mu), nu) alpha^{-(nu+1+j)} L_j(r^2/(alpha mu)) E_{q^2}(-r^2/(alpha mu)).
    """
    nu, gamma = spec.nu, spec.scale
    grid = spec.grid or JacksonSpec(gamma=gamma)
    form = f.known_form
    image: LaguerreBlock | MonomialGaussian | Opaque = Opaque()
    if isinstance(form, MonomialGaussian):
        alpha = form.alpha
        weight = form.coef / laguerre_block_constant(ctx, nu, form.j)
        constant = inversion_constant(ctx, nu, alpha, grid.gamma) * alpha ** (-(nu + 1 + form.j))
        image = LaguerreBlock(j=form.j, order=nu, beta=1.0 / alpha, coef=weight * constant)
    logger.debug("hankel2_prepared", nu=nu, gamma=grid.gamma, image=image.kind)
    evaluator = _memoized(lambda r: hankel2_at(ctx, nu, grid, f.exact, r))
    return RadialFunction(ctx=ctx, evaluator=evaluator, known_form=image, checked=False)


def inverse_hankel1(ctx: QContext, spec: HankelSpec, g: RadialFunction, gamma: float = 1.0) -> RadialFunction:
    """Invert the first transform with beta = ``spec.scale``: H^gamma / d(gamma/sqrt(beta mu), nu)."""
    beta = spec.scale
    constant = d_const(ctx, gamma / math.sqrt(beta * ctx.mu), spec.nu)
    return _scaled(hankel2(ctx, HankelSpec(nu=spec.nu, scale=gamma), g), 1.0 / constant)


def inverse_hankel2(ctx: QContext, spec: HankelSpec, f: RadialFunction, alpha: float) -> RadialFunction:
    """Invert the second transform on R[t^2] e_{q^2}(-alpha q^2 t^2/mu): H-bar^{1/alpha} / d."""
    constant = inversion_constant(ctx, spec.nu, alpha, spec.scale)
    return _scaled(hankel1(ctx, HankelSpec(nu=spec.nu, scale=1.0 / alpha), f), 1.0 / constant)


def round_trip(ctx: QContext, spec: HankelSpec, f: RadialFunction, gamma: float = 1.0) -> RadialFunction:
    """Apply hankel1 then its inverse; the identity on Gaussian-weighted Laguerre spans."""
    start_time = time.perf_counter()
    result = inverse_hankel1(ctx, spec, hankel1(ctx, spec, f), gamma)
    logger.debug(
        "hankel_round_trip_built",
        nu=spec.nu,
        beta=spec.scale,
        gamma=gamma,
        duration_ms=(time.perf_counter() - start_time) * 1000,
    )
    return result


# ---------------------------------------------------------------------------
# Laguerre pair identities at mu = 1 + q
# ---------------------------------------------------------------------------


def pre_hankel_pair_first(ctx: QContext, nu: float, j: int, t: float) -> tuple[float, float]:
    """Quadrature and closed form of the first Laguerre pair identity.

    Returns (int_0^{1/sqrt(1-q)} J1(rt)/(rt)^nu r^{2nu+1} L_j(r^2/(1+q)) E(-r^2/(1+q)) d_q r,
    q^{2(j+1)(j+nu+1)}/[j]! t^{2j}/(1+q)^j e(-q^2 t^2/(1+q))).
    """
    flat = euclidean(ctx)
    q = ctx.q
    p = q * q
    block = LaguerreBlock(j=j, order=nu, beta=1.0)
    quadrature = hankel1_at(flat, nu, 1.0, lambda r: block.closed_form(flat, r), t)
    closed = (
        q ** (2 * (j + 1) * (j + nu + 1))
        / factorial(p, j)
        * t ** (2 * j)
        / (1.0 + q) ** j
        * exp_small(ctx, -p * t * t / (1.0 + q), base=p)
    )
    return quadrature, closed


def pre_hankel_pair_second(ctx: QContext, nu: float, j: int, r: float, gamma: float = 1.0) -> tuple[float, float]:
    """Quadrature and closed form of the second Laguerre pair identity.

    The input is L_j(q^2 t^2/(1+q) | q^-2) e(-q^2 t^2/(1+q)); the image is
    d(gamma/sqrt(1+q), nu) q^{-(j+1)(j+2nu+2)}/[j]! r^{2j}/(1+q)^j E(-r^2/(1+q)).
    """
    flat = euclidean(ctx)
    q = ctx.q
    p = q * q

    def f(t: float) -> float:
        u = p * t * t / (1.0 + q)
        return laguerre_q2inv(ctx, j, nu, u) * exp_small(ctx, -u, base=p)

    quadrature = hankel2_at(flat, nu, JacksonSpec(gamma=gamma), f, r)
    closed = (
        d_const(ctx, gamma / math.sqrt(1.0 + q), nu)
        * q ** (-(j + 1) * (j + 2 * nu + 2))
        / factorial(p, j)
        * r ** (2 * j)
        / (1.0 + q) ** j
        * exp_big(ctx, -r * r / (1.0 + q), base=p)
    )
    return quadrature, closed


def laguerre_block(ctx: QContext, j: int, nu: float, beta: float = 1.0, coef: float = 1.0) -> RadialFunction:
    """Convenience constructor for a tagged Laguerre block."""
    return RadialFunction.from_form(ctx, LaguerreBlock(j=j, order=nu, beta=beta, coef=coef))


def monomial_gaussian(ctx: QContext, j: int, alpha: float, coef: float = 1.0) -> RadialFunction:
    """Convenience constructor for a tagged monomial Gaussian."""
    return RadialFunction.from_form(ctx, MonomialGaussian(j=j, alpha=alpha, coef=coef))


