"""Checks of the q-Hankel transforms, their inversion and the braided line."""

from src.fischer.fourier import fourier_inverse, quadrature_block
from src.fischer.schemas import GaussTag
from src.fischer.service import element, profile_at
from src.qcore.schemas import QContext
from src.qhankel.braided import (
    forward_closed,
    fourier_braided_line,
    monomial_gaussian_1d,
    multiplication_rule,
    weighted_hermite,
)
from src.qhankel.operational import first_rule, second_rule
from src.qhankel.schemas import HankelSpec, LaguerreBlock, MonomialGaussian
from src.qhankel.service import (
    hankel1,
    hankel2,
    inverse_hankel2,
    laguerre_block,
    laguerre_block_constant,
    monomial_gaussian,
    pre_hankel_pair_first,
    pre_hankel_pair_second,
    round_trip,
)
from src.verify.registry import CheckContext, check, rel_gap


RADII = (0.2, 0.5, 0.9)


def _orders(c: CheckContext) -> list[float]:
    return sorted({-0.5, 0.5, c.ctx.m / 2 - 1})


def _line(c: CheckContext) -> QContext:
    return QContext(q=c.ctx.q, m=1, precision=c.ctx.precision)


def _unit(k: int) -> list[complex]:
    return [0j] * k + [1 + 0j]


@check("qhankel.inversion_first", tol=1e-8)
def inversion_first(c: CheckContext) -> float:
    """The normalized second transform undoes the first on Laguerre blocks, j <= 4."""
    worst = 0.0
    for nu in _orders(c):
        spec = HankelSpec(nu=nu)
        for j in range(5):
            block = laguerre_block(c.ctx, j, nu)
            restored = round_trip(c.ctx, spec, block, gamma=c.gamma)
            worst = max(worst, *(rel_gap(restored(r), block(r), 1e-8) for r in RADII))
    return worst


@check("qhankel.inversion_second", tol=1e-8)
def inversion_second(c: CheckContext) -> float:
    """The normalized first transform undoes the second on monomial Gaussians, j <= 4."""
    worst = 0.0
    alpha = 2.0
    for nu in _orders(c):
        spec = HankelSpec(nu=nu, scale=c.gamma)
        for j in range(5):
            source = monomial_gaussian(c.ctx, j, alpha)
            restored = inverse_hankel2(c.ctx, spec, hankel2(c.ctx, spec, source), alpha)
            worst = max(worst, *(rel_gap(restored(t), source(t), 1e-8) for t in RADII))
    return worst


@check("qhankel.gamma_independence", tol=1e-8)
def gamma_independence(c: CheckContext) -> float:
    """Jackson quadrature of the normalized inverse Fourier transform on the grids through 0.7, 1 and 1.3.

    Every grid must land on the same closed-form image, taken at gamma = 1.
    """
    e = element(c.ctx, {0: [1.0, 0.3], 1: [0.4], 2: [0.5, 0.0, -0.2]}, GaussTag(type="e_small", scale=1.0))
    reference = fourier_inverse(e, gamma=1.0)
    worst = 0.0
    for gamma in (0.7, 1.0, 1.3):
        for k, block in e.blocks.items():
            for r in RADII:
                quadrature = quadrature_block(c.ctx, k, block, r, direction="inverse", gamma=gamma)
                worst = max(worst, rel_gap(quadrature, profile_at(c.ctx, reference.blocks[k], r), 1e-8))
    return worst


@check("qhankel.pre_hankel_pair_first", tol=1e-9)
def pre_hankel_pair_first_check(c: CheckContext) -> float:
    """Finite-grid Laguerre pair at mu = 1 + q, j <= 3."""
    return max(
        rel_gap(*pre_hankel_pair_first(c.ctx, nu, j, t), 1e-9)
        for nu in _orders(c)
        for j in range(4)
        for t in (0.3, 0.8)
    )


@check("qhankel.pre_hankel_pair_second", tol=1e-8)
def pre_hankel_pair_second_check(c: CheckContext) -> float:
    """Infinite-grid Laguerre pair at mu = 1 + q, j <= 3."""
    return max(
        rel_gap(*pre_hankel_pair_second(c.ctx, nu, j, r, c.gamma), 1e-8)
        for nu in _orders(c)
        for j in range(4)
        for r in (0.3, 0.8)
    )


@check("qhankel.closed_forms", tol=1e-8)
def closed_forms(c: CheckContext) -> float:
    """Tagged images of both transforms agree with their Jackson quadrature."""
    ctx = c.ctx
    worst = 0.0
    for nu in _orders(c):
        for j in range(3):
            beta = float(c.rng.uniform(0.7, 1.5))
            first = hankel1(ctx, HankelSpec(nu=nu, scale=beta), laguerre_block(ctx, j, nu, beta))
            source = monomial_gaussian(ctx, j, 1.0, coef=laguerre_block_constant(ctx, nu, j))
            second = hankel2(ctx, HankelSpec(nu=nu, scale=c.gamma), source)
            for x in RADII:
                worst = max(worst, rel_gap(first(x), first.exact(x), 1e-8), rel_gap(second(x), second.exact(x), 1e-8))
    return worst


@check("qhankel.braided_forward", tol=1e-9)
def braided_forward(c: CheckContext) -> float:
    """Weighted Hermite functions map to i^-k (1+q)^{(k-1)/2} q^{(k+1)(k+2)/2} y^k e(-q^2 y^2/(1+q)), k <= 4."""
    line = _line(c)
    worst = 0.0
    for k in range(5):
        forward = fourier_braided_line(line, _unit(k), "forward")
        constant = forward_closed(line, _unit(k))[k]
        for y in (-0.6, 0.3, 0.9):
            worst = max(worst, rel_gap(forward(y), constant * monomial_gaussian_1d(line, k, y), 1e-9))
    return worst


@check("qhankel.braided_inverse", tol=1e-8)
def braided_inverse(c: CheckContext) -> float:
    """The inverse on the two-sided infinite grid undoes the forward images, k <= 4."""
    line = _line(c)
    worst = 0.0
    for k in range(5):
        inverse = fourier_braided_line(line, forward_closed(line, _unit(k)), "inverse", delta=c.gamma)
        for x in (0.3, 0.8):
            worst = max(worst, rel_gap(inverse(x), weighted_hermite(line, k, x), 1e-8))
    return worst


@check("qhankel.braided_multiplication", tol=1e-9)
def braided_multiplication(c: CheckContext) -> float:
    """F[x f] = i d^q_y F[f] for the weighted Hermite functions."""
    line = _line(c)
    return max(rel_gap(*multiplication_rule(line, k, y), 1e-9) for k in range(4) for y in (0.4, 0.7))


@check("qhankel.first_operational", tol=1e-9)
def first_operational(c: CheckContext) -> float:
    """Three-term, lowering and derivative rules of the first transform on Laguerre blocks."""
    ctx = c.ctx
    worst = 0.0
    for nu in (0.5, 1.5):
        for j in range(3):
            block = LaguerreBlock(j=j, order=nu, beta=1.0)

            def f(r: float, block: LaguerreBlock = block) -> float:
                return block.closed_form(ctx, r)

            for rule in ("three_term", "lowering", "derivative"):
                for t in (0.3, 0.8):
                    worst = max(worst, rel_gap(*first_rule(ctx, rule, nu, 1.0, f, t), 1e-9))  # type: ignore[arg-type]
    return worst


@check("qhankel.second_operational", tol=1e-9)
def second_operational(c: CheckContext) -> float:
    """Three-term, lowering, derivative and Euler-type rules of the second transform on monomial Gaussians."""
    ctx = c.ctx
    worst = 0.0
    for nu in (0.5, 1.5):
        for j in range(3):
            form = MonomialGaussian(j=j, alpha=1.0)

            def f(t: float, form: MonomialGaussian = form) -> float:
                return form.closed_form(ctx, t)

            for rule in ("three_term", "lowering", "derivative", "euler"):
                for r in (0.3, 0.8):
                    pair = second_rule(ctx, rule, nu, f, r, c.gamma)  # type: ignore[arg-type]
                    worst = max(worst, rel_gap(*pair, 1e-9))
    return worst
