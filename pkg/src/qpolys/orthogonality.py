"""Orthogonality of the two q-Laguerre families against their q-Gaussian weights."""

import math

from src.qcore.schemas import JacksonSpec, QContext
from src.qcore.service import exp_big, exp_small, factorial, jackson_infinite, q_gamma2, q_integrate_finite
from src.qhankel.service import d_const
from src.qpolys.service import laguerre_q2, laguerre_q2inv


def laguerre_orthogonality_finite(ctx: QContext, j: int, k: int, alpha: float) -> float:
    """int_0^{1/sqrt(1-q)} r^{2alpha+1} L_j L_k (r^2/(1+q) | q^2) E_{q^2}(-r^2/(1+q)) d_q r."""
    q = ctx.q
    p = q * q

    def integrand(r: float) -> float:
        u = r * r / (1.0 + q)
        weight = r ** (2 * alpha + 1) * exp_big(ctx, -u, base=p)
        return weight * laguerre_q2(ctx, j, alpha, u) * laguerre_q2(ctx, k, alpha, u)

    return q_integrate_finite(ctx, integrand, 1.0 / math.sqrt(1.0 - q))


def laguerre_norm_finite(ctx: QContext, j: int, alpha: float) -> float:
    """Diagonal value q^{2(j+1)(j+alpha+1)} Gamma_{q^2}(j+alpha+1) (1+q)^alpha / [j]_{q^2}!."""
    q = ctx.q
    weight = q ** (2 * (j + 1) * (j + alpha + 1)) * (1.0 + q) ** alpha
    return weight * q_gamma2(ctx, j + alpha + 1) / factorial(q * q, j)


def laguerre_orthogonality_infinite(ctx: QContext, j: int, k: int, alpha: float, gamma: float = 1.0) -> float:
    """int_0^{gamma inf} t^{2alpha+1} L_j L_k (q^2 t^2/(1+q) | q^-2) e_{q^2}(-q^2 t^2/(1+q)) d_q t."""
    q = ctx.q
    p = q * q

    def integrand(t: float) -> float:
        u = p * t * t / (1.0 + q)
        weight = t ** (2 * alpha + 1) * exp_small(ctx, -u, base=p)
        return weight * laguerre_q2inv(ctx, j, alpha, u) * laguerre_q2inv(ctx, k, alpha, u)

    return jackson_infinite(ctx, integrand, JacksonSpec(gamma=gamma)).value


def laguerre_norm_infinite(ctx: QContext, j: int, alpha: float, gamma: float = 1.0) -> float:
    """Diagonal value, including the grid-dependent factor d(gamma/sqrt(1+q), alpha)."""
    q = ctx.q
    numerator = q ** (-(j + alpha) * (j + alpha + 1)) * q_gamma2(ctx, j + alpha + 1) * (1.0 + q) ** alpha
    denominator = factorial(q * q, j) * q ** ((j + 1) * (j + 2 * alpha + 2))
    return numerator / denominator * d_const(ctx, gamma / math.sqrt(1.0 + q), alpha)
