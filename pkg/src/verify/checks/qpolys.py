"""Checks of the q-orthogonal polynomials."""

from src.qhankel.service import d_const
from src.qpolys.orthogonality import (
    laguerre_norm_finite,
    laguerre_norm_infinite,
    laguerre_orthogonality_finite,
    laguerre_orthogonality_infinite,
)
from src.qpolys.service import gegenbauer, gegenbauer_coeffs, laguerre_polynomial_coefficients, laguerre_q2
from src.verify.registry import CheckContext, check, rel_gap


LAGUERRE_ALPHAS = (-0.5, 0.0, 1.5)


@check("qpolys.orthogonality_finite", tol=1e-9)
def orthogonality_finite(c: CheckContext) -> float:
    """Gram matrix of L_j(r^2/(1+q) | q^2) against E_{q^2} on [0, 1/sqrt(1-q)], j, k <= 5."""
    worst = 0.0
    for alpha in LAGUERRE_ALPHAS:
        for j in range(6):
            diagonal = laguerre_norm_finite(c.ctx, j, alpha)
            worst = max(worst, rel_gap(laguerre_orthogonality_finite(c.ctx, j, j, alpha), diagonal))
            for k in range(j):
                worst = max(worst, abs(laguerre_orthogonality_finite(c.ctx, j, k, alpha)) / diagonal)
    return worst


@check("qpolys.orthogonality_infinite", tol=1e-9)
def orthogonality_infinite(c: CheckContext) -> float:
    """Gram matrix of L_j(q^2 t^2/(1+q) | q^-2) against e_{q^2} on the grid through gamma, j, k <= 5."""
    worst = 0.0
    for alpha in LAGUERRE_ALPHAS:
        for j in range(6):
            diagonal = laguerre_norm_infinite(c.ctx, j, alpha, c.gamma)
            worst = max(worst, rel_gap(laguerre_orthogonality_infinite(c.ctx, j, j, alpha, c.gamma), diagonal))
            for k in range(j):
                worst = max(worst, abs(laguerre_orthogonality_infinite(c.ctx, j, k, alpha, c.gamma)) / abs(diagonal))
    return worst


@check("qpolys.d_shift_invariance", tol=1e-10)
def d_shift_invariance(c: CheckContext) -> float:
    """d(lambda, alpha + 1) = d(lambda, alpha)."""
    return max(
        rel_gap(d_const(c.ctx, lam, alpha + 1.0), d_const(c.ctx, lam, alpha))
        for lam in (0.8, 1.0, 1.3)
        for alpha in (-0.5, 0.0, 0.7)
    )


@check("qpolys.gegenbauer_coefficients", tol=1e-12)
def gegenbauer_coefficients(c: CheckContext) -> float:
    """sum_j c_j t^{n-2j} = C_n^lambda(q; mu t/(1+q)) for n <= 6."""
    ctx = c.ctx
    worst = 0.0
    for n in range(7):
        lam = float(c.rng.uniform(0.2, 2.0))
        coefficients = gegenbauer_coeffs(ctx, n, lam)
        for t in c.rng.uniform(-1.0, 1.0, size=3):
            resummed = sum(cj * t ** (n - 2 * j) for j, cj in enumerate(coefficients))
            direct = gegenbauer(ctx, n, lam, ctx.mu * t / (1.0 + ctx.q))
            worst = max(worst, rel_gap(resummed, direct, max(abs(cj) for cj in coefficients)))
    return worst


@check("qpolys.gegenbauer_parity", tol=1e-14)
def gegenbauer_parity(c: CheckContext) -> float:
    """C_n(q; -t) = (-1)^n C_n(q; t) for n <= 6."""
    return max(
        rel_gap(gegenbauer(c.ctx, n, 0.75, -t), (-1) ** n * gegenbauer(c.ctx, n, 0.75, t), 1e-300)
        for n in range(7)
        for t in (0.3, 0.9)
    )


@check("qpolys.laguerre_coefficients", tol=1e-12)
def laguerre_coefficients(c: CheckContext) -> float:
    """Power coefficients of L_j(s u | q^2) resum to the finite-sum value."""
    worst = 0.0
    for j in range(6):
        coefficients = laguerre_polynomial_coefficients(c.ctx, j, 0.5, 0.8)
        for u in (0.2, 1.1):
            resummed = sum(a * u**i for i, a in enumerate(coefficients))
            scale = max(abs(a) for a in coefficients) * max(1.0, u) ** j
            worst = max(worst, rel_gap(resummed, laguerre_q2(c.ctx, j, 0.5, 0.8 * u), scale))
    return worst
