"""Checks of the scalar q-calculus."""

import math

import numpy as np
from numpy.polynomial import Polynomial

from src.qcore.schemas import JacksonSpec
from src.qcore.service import (
    bracket,
    exp_big,
    exp_small,
    q_derivative,
    q_gamma2,
    q_integrate_finite,
    q_integrate_infinite,
)
from src.verify.registry import CheckContext, check, rel_gap


def _inside_disc(c: CheckContext, count: int) -> np.ndarray:
    radius = 0.9 / (1.0 - c.ctx.q)
    return np.linspace(-radius, radius, count)


@check("qcore.exp_inverse", tol=1e-12)
def exp_inverse(c: CheckContext) -> float:
    """e_q(t) E_q(-t) = 1."""
    return max(rel_gap(exp_small(c.ctx, t) * exp_big(c.ctx, -t), 1.0) for t in _inside_disc(c, 20))


@check("qcore.exp_derivatives", tol=1e-12)
def exp_derivatives(c: CheckContext) -> float:
    """d^q e_q = e_q and d^q E_q(t) = E_q(qt)."""
    ctx, q = c.ctx, c.ctx.q
    worst = 0.0
    for t in (*np.arange(0.1, 1.0, 0.1), *-np.arange(0.1, 1.0, 0.1)):
        small = q_derivative(ctx, lambda s: exp_small(ctx, s), t)
        big = q_derivative(ctx, lambda s: exp_big(ctx, s), t)
        worst = max(worst, rel_gap(small, exp_small(ctx, t)), rel_gap(big, exp_big(ctx, q * t)))
    return worst


@check("qcore.exp_zeros", tol=1e-12)
def exp_zeros(c: CheckContext) -> float:
    """E_q(-q^-k/(1-q)) = 0 for k <= 3."""
    q = c.ctx.q
    return max(abs(exp_big(c.ctx, -(q**-k) / (1.0 - q))) for k in range(4))


@check("qcore.gamma_recurrence", tol=1e-12)
def gamma_recurrence(c: CheckContext) -> float:
    """Gamma_{q^2}(t+1) = [t]_{q^2} Gamma_{q^2}(t)."""
    p = c.ctx.q ** 2
    return max(
        rel_gap(q_gamma2(c.ctx, t + 1.0), bracket(p, t) * q_gamma2(c.ctx, t)) for t in (0.3, 0.7, 1.5, 2.25, 3.6)
    )


def _random_polynomial(c: CheckContext) -> Polynomial:
    return Polynomial(c.rng.normal(size=int(c.rng.integers(2, 10))))


@check("qcore.fundamental_theorem", tol=1e-12)
def fundamental_theorem(c: CheckContext) -> float:
    """int_0^a d^q f = f(a) - f(0) for random polynomials of degree <= 8."""
    worst = 0.0
    for _ in range(5):
        f = _random_polynomial(c)
        a = float(c.rng.uniform(0.5, 2.0))
        integral = q_integrate_finite(c.ctx, lambda t, f=f: q_derivative(c.ctx, f, t), a)
        scale = float(np.max(np.abs(f.coef))) * max(1.0, a) ** f.degree()
        worst = max(worst, rel_gap(integral, f(a) - f(0.0), scale))
    return worst


@check("qcore.leibniz", tol=1e-12)
def leibniz(c: CheckContext) -> float:
    """d^q(fg)(t) = d^q f(t) g(t) + f(qt) d^q g(t)."""
    ctx, q = c.ctx, c.ctx.q
    worst = 0.0
    for _ in range(5):
        f, g = _random_polynomial(c), _random_polynomial(c)
        t = float(c.rng.uniform(0.2, 1.5))
        lhs = q_derivative(ctx, lambda s: f(s) * g(s), t)
        first, second = q_derivative(ctx, f, t) * g(t), f(q * t) * q_derivative(ctx, g, t)
        worst = max(worst, rel_gap(lhs, first + second, max(abs(first), abs(second))))
    return worst


@check("qcore.finite_reduction", tol=1e-12)
def finite_reduction(c: CheckContext) -> float:
    """The infinite integral against E_{q^2}(-t^2/(1+q)) on the grid through 1/sqrt(1-q) is the finite one."""
    ctx, q = c.ctx, c.ctx.q
    edge = 1.0 / math.sqrt(1.0 - q)
    worst = 0.0
    for _ in range(3):
        f = _random_polynomial(c)

        def integrand(t: float, f: Polynomial = f) -> float:
            return float(f(t)) * exp_big(ctx, -t * t / (1.0 + q), base=q * q)

        infinite = q_integrate_infinite(ctx, integrand, JacksonSpec(gamma=edge))
        finite = q_integrate_finite(ctx, integrand, edge)
        worst = max(worst, rel_gap(infinite, finite, 1e-300))
    return worst


@check("qcore.grid_shift", tol=1e-12)
def grid_shift(c: CheckContext) -> float:
    """The infinite integral of t e_{q^2}(-q^2 t^2/(1+q)) is the same on the grids through gamma and q gamma."""
    ctx, q = c.ctx, c.ctx.q

    def integrand(t: float) -> float:
        return t * exp_small(ctx, -q * q * t * t / (1.0 + q), base=q * q)

    coarse = q_integrate_infinite(ctx, integrand, JacksonSpec(gamma=c.gamma))
    fine = q_integrate_infinite(ctx, integrand, JacksonSpec(gamma=q * c.gamma))
    return rel_gap(coarse, fine)
