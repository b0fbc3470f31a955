"""Checks of sphere integration, Stokes, Funk-Hecke and the reproducing kernel."""

from src.fischer.schemas import GaussTag
from src.fischer.service import element
from src.shared.errors import CheckSkipped
from src.sphere.service import (
    funk_hecke_alpha,
    funk_hecke_from_bessel,
    gaussian_moment_ratio,
    reproducing_check,
    reproducing_constant,
    space_integrate,
    sphere_integrate,
    sphere_volume,
    stokes_residual,
    techgamma_sum,
)
from src.verify.registry import CheckContext, check, rel_gap


@check("sphere.pizzetti_powers", tol=1e-12)
def pizzetti_powers(c: CheckContext) -> float:
    """x^{2l} integrates like 1 for l <= 6, through both the profile and the Laplacian sum."""
    volume = sphere_volume(c.ctx)
    worst = 0.0
    for power in range(7):
        e = element(c.ctx, {0: [0.0] * power + [1.0]})
        for method in ("direct", "pizzetti"):
            worst = max(worst, rel_gap(sphere_integrate(e, method=method).value, volume))  # type: ignore[arg-type]
    return worst


@check("sphere.harmonic_blocks", tol=1e-12)
def harmonic_blocks(c: CheckContext) -> float:
    """Blocks with k >= 1 integrate to zero."""
    e = element(c.ctx, {k: c.rng.normal(size=3).tolist() for k in range(1, 5)})
    return abs(sphere_integrate(e, method="pizzetti").value) / sphere_volume(c.ctx)


@check("sphere.pizzetti_direct", tol=1e-12)
def pizzetti_direct(c: CheckContext) -> float:
    """The Laplacian-power form agrees with the direct one on random polynomials."""
    worst = 0.0
    for _ in range(5):
        e = element(c.ctx, {0: c.rng.normal(size=6).tolist(), 2: c.rng.normal(size=3).tolist()})
        direct = sphere_integrate(e, method="direct").value
        pizzetti = sphere_integrate(e, method="pizzetti").value
        worst = max(worst, rel_gap(pizzetti, direct, sphere_volume(c.ctx)))
    return worst


@check("sphere.moment_ratio", tol=1e-9)
def moment_ratio(c: CheckContext) -> float:
    """Gaussian moments of x^{2l} over the mass follow the Gamma ratio for l <= 4."""
    gauss = GaussTag(type="e_small", scale=1.0)
    mass = space_integrate(element(c.ctx, {0: [1.0]}, gauss), gamma=c.gamma)
    alpha = c.ctx.q**2 / c.ctx.mu
    return max(
        rel_gap(
            space_integrate(element(c.ctx, {0: [0.0] * power + [1.0]}, gauss), gamma=c.gamma) / mass,
            gaussian_moment_ratio(c.ctx, alpha, power),
        )
        for power in range(1, 5)
    )


@check("sphere.stokes", tol=1e-8)
def stokes(c: CheckContext) -> float:
    """Radial Stokes identity on the support ball of E_{q^2}(-beta x^2/mu)."""
    return max(abs(stokes_residual(c.ctx, beta, power)) for beta in (0.5, 1.0, 2.0) for power in range(4))


@check("sphere.funk_hecke", tol=1e-10)
def funk_hecke(c: CheckContext) -> float:
    """Closed-form alpha_{k,l} against the Bessel series of the sphere integral."""
    return max(
        rel_gap(funk_hecke_from_bessel(c.ctx, k, k + offset), funk_hecke_alpha(c.ctx, k, k + offset))
        for k in range(4)
        for offset in range(0, 7, 2)
    )


@check("sphere.techgamma", tol=1e-10)
def techgamma(c: CheckContext) -> float:
    """The alternating Gamma-ratio sum vanishes for 1 <= l <= 6 at five alpha values."""
    alphas = (0.5, 1.3, 2.0, -0.7, 3.5)
    return max(abs(techgamma_sum(c.ctx, power, alpha)) for power in range(1, 7) for alpha in alphas)


@check("sphere.reproducing", tol=1e-10)
def reproducing(c: CheckContext) -> float:
    """Sum_j c_j alpha_{k,n-2j} = delta_{kn}/C_n for n, k <= 8, relative to 1/C_n."""
    if c.ctx.m <= 2:
        msg = f"the reproducing kernel has no normalization at m={c.ctx.m}"
        raise CheckSkipped(msg)
    worst = 0.0
    for n in range(9):
        scale = max(1.0, 1.0 / reproducing_constant(c.ctx, n))
        for k in range(9):
            worst = max(worst, abs(reproducing_check(c.ctx, n, k)) / scale)
    return worst
