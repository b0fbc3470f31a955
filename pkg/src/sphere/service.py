"""Integration over the quantum sphere and Gaussian-induced integration on the space.

The sphere integral vanishes on every block x^{2l} S_k with k >= 1 and takes
the same value on every x^{2l}. Space integrals factor into that sphere value
and a radial Jackson integral of r^{m-1} times the k = 0 profile.
"""

import time

from src.fischer.schemas import FischerElement, RadialSeries
from src.fischer.service import expand, op_laplace, profile_at
from src.qbessel.service import bessel_coefficients
from src.qcore.schemas import JacksonSpec, QContext
from src.qcore.service import (
    binomial,
    bracket,
    exp_big,
    factorial,
    q_derivative,
    q_gamma2,
    q_integrate_finite,
    q_integrate_infinite,
    rising,
)
from src.qhankel.service import first_support
from src.qpolys.service import gegenbauer_coeffs
from src.shared.config import get_settings
from src.shared.errors import QDomainError
from src.shared.logging import get_logger
from src.sphere.schemas import SphereIntegralResult, SphereMethod, SpaceMode


logger = get_logger(__name__)


def _require_quantum(ctx: QContext) -> None:
    if ctx.frame != "quantum":
        msg = "sphere integration is defined on the quantum Euclidean space only"
        raise QDomainError(msg)


def _real_sign(s: RadialSeries) -> float:
    if s.phase % 2:
        msg = f"the k=0 block is imaginary (phase {s.phase}); sphere integrals here are real"
        raise QDomainError(msg)
    return 1.0 if s.phase == 0 else -1.0


def sphere_volume(ctx: QContext) -> float:
    """Integral of 1 over the quantum sphere, 2 Gamma_{q^2}(1/2)^m / Gamma_{q^2}(m/2)."""
    return 2.0 * q_gamma2(ctx, 0.5) ** ctx.m / q_gamma2(ctx, ctx.m / 2)


def pizzetti_weight(ctx: QContext, n: int) -> float:
    """Weight of (Delta^n R)(0) in the Pizzetti sum."""
    p = ctx.q**2
    return 2.0 * q_gamma2(ctx, 0.5) ** ctx.m / (ctx.mu ** (2 * n) * factorial(p, n) * q_gamma2(ctx, n + ctx.m / 2))


def _pizzetti_mass(e: FischerElement, order: int | None) -> float:
    current = expand(e.with_blocks({0: e.block(0)}), order)
    total = 0.0
    n = 0
    while not current.is_zero:
        block = current.block(0)
        if block.valid_to is not None and block.valid_to < 0:
            break
        total += pizzetti_weight(e.ctx, n) * block.coefficient(0)
        current = op_laplace(current)
        n += 1
    return total / sphere_volume(e.ctx)


def sphere_integrate(
    e: FischerElement, *, method: SphereMethod = "direct", order: int | None = None
) -> SphereIntegralResult:
    """Integrate an element over the quantum sphere.

    ``direct`` evaluates the k = 0 profile at x^2 = 1; ``pizzetti`` sums
    weighted powers of the Laplacian at the origin on the expanded view, which
    is exact for polynomials and truncated at ``order`` for Gaussian blocks.

    Raises:
        QDomainError: Outside the quantum frame, or when the k = 0 block is imaginary.
    """
    ctx = e.ctx
    _require_quantum(ctx)
    block = e.block(0)
    dropped = sum(1 for k in e.blocks if k > 0)
    if block.is_zero:
        return SphereIntegralResult(value=0.0, k0_mass=0.0, nonzero_blocks_dropped=dropped, method=method)
    sign = _real_sign(block)
    mass = profile_at(ctx, block, 1.0) if method == "direct" else _pizzetti_mass(e, order)
    mass *= sign
    return SphereIntegralResult(
        value=mass * sphere_volume(ctx), k0_mass=mass, nonzero_blocks_dropped=dropped, method=method
    )


def space_integrate(
    e: FischerElement,
    mode: SpaceMode = "infinite",
    *,
    gamma: float | None = None,
    lam: float | None = None,
) -> float:
    """Gaussian-induced integral over the whole space or over a ball.

    ``infinite`` integrates P (x) e_{q^2} elements on the grid anchored at
    ``gamma``; ``ball`` integrates P (x) E_{q^2} elements over [0, lam], with lam
    defaulting to the outermost zero sqrt(mu/((1-q^2) beta)) of the Gaussian.

    Raises:
        QDomainError: If a block carries the Gaussian of the other mode or is a truncated expansion.
    """
    ctx = e.ctx
    _require_quantum(ctx)
    expected = "e_small" if mode == "infinite" else "e_big"
    for k, s in e.blocks.items():
        if s.gauss.type != expected or s.valid_to is not None:
            msg = f"{mode} integration needs exact {expected} blocks, block k={k} carries {s.gauss.type}"
            raise QDomainError(msg)
    block = e.block(0)
    if block.is_zero:
        return 0.0
    sign = _real_sign(block)
    start_time = time.perf_counter()

    def radial(r: float) -> float:
        return r ** (ctx.m - 1) * profile_at(ctx, block, r)

    if mode == "infinite":
        anchor = get_settings().gamma if gamma is None else gamma
        value = q_integrate_infinite(ctx, radial, JacksonSpec(gamma=anchor))
    else:
        value = q_integrate_finite(ctx, radial, first_support(ctx, block.gauss.scale) if lam is None else lam)
    logger.debug("space_integrate_completed", mode=mode, duration_ms=(time.perf_counter() - start_time) * 1000)
    return sign * sphere_volume(ctx) * value


def gaussian_moment_ratio(ctx: QContext, alpha: float, l: int) -> float:  # noqa: E741
    """Ratio of the integrals of x^{2l} e_{q^2}(-alpha x^2) and e_{q^2}(-alpha x^2).

    Equals Gamma_{q^2}(m/2 + l) / (Gamma_{q^2}(m/2) alpha^l q^{l(l+m-1)}) for every anchor.
    """
    if l < 0 or alpha <= 0.0:
        msg = f"moment ratio needs l >= 0 and alpha > 0, got l={l}, alpha={alpha}"
        raise QDomainError(msg)
    q = ctx.q
    return rising(q * q, ctx.m / 2, l) / (alpha**l * q ** (l * (l + ctx.m - 1)))


# ---------------------------------------------------------------------------
# Stokes property on the ball
# ---------------------------------------------------------------------------


def _ball_radius(ctx: QContext, beta: float, power: int) -> float:
    if beta <= 0.0 or power < 0:
        msg = f"Stokes check needs beta > 0 and l >= 0, got beta={beta}, l={power}"
        raise QDomainError(msg)
    return first_support(ctx, beta)


def _shifted(ctx: QContext, beta: float, power: int, r: float) -> float:
    """f(q^-2 r^2) with f(u) = u^l E_{q^2}(-beta u/mu)."""
    u = r * r / (ctx.q * ctx.q)
    return u**power * exp_big(ctx, -beta * u / ctx.mu, base=ctx.q * ctx.q)


def stokes_boundary_term(ctx: QContext, beta: float, l: int) -> float:  # noqa: E741
    """lambda^m f(q^-2 lambda^2), zero because q^-2 lambda^2 sits on a zero of the E-Gaussian."""
    lam = _ball_radius(ctx, beta, l)
    return lam**ctx.m * _shifted(ctx, beta, l, lam)


def stokes_residual(ctx: QContext, beta: float, l: int) -> float:  # noqa: E741
    """Gap in the radial Stokes identity on the ball of radius sqrt(mu/((1-q^2) beta)).

    Returns q^m int r^m d_q[f(q^-2 r^2)] + [m]_q int r^{m-1} f(q^-2 r^2) - lambda^m f(q^-2 lambda^2).
    """
    lam = _ball_radius(ctx, beta, l)
    m = ctx.m

    def g(r: float) -> float:
        return _shifted(ctx, beta, l, r)

    derivative_part = q_integrate_finite(ctx, lambda r: r**m * q_derivative(ctx, g, r), lam)
    value_part = q_integrate_finite(ctx, lambda r: r ** (m - 1) * g(r), lam)
    return ctx.q**m * derivative_part + bracket(ctx.q, m) * value_part - stokes_boundary_term(ctx, beta, l)


# ---------------------------------------------------------------------------
# Funk-Hecke coefficients and the reproducing kernel
# ---------------------------------------------------------------------------


def funk_hecke_alpha(ctx: QContext, k: int, l: int) -> float:  # noqa: E741
    """Coefficient alpha_{k,l} with int S_k(x) <x|y>^(l) = alpha_{k,l} S_k(y) y^{l-k}."""
    _require_quantum(ctx)
    if k < 0 or l < 0:
        msg = f"Funk-Hecke coefficient needs k, l >= 0, got k={k}, l={l}"
        raise QDomainError(msg)
    if l < k or (l - k) % 2:
        return 0.0
    q = ctx.q
    return (
        2.0
        * q_gamma2(ctx, 0.5) ** ctx.m
        * factorial(q, l)
        / (ctx.mu**l * factorial(q * q, (l - k) // 2) * q_gamma2(ctx, (k + l + ctx.m) / 2))
    )


def funk_hecke_from_bessel(ctx: QContext, k: int, l: int) -> float:  # noqa: E741
    """alpha_{k,l} read off the power series of the sphere integral of S_k times the Fourier kernel.

    That integral is 2 mu^{m/2-1} Gamma_{q^2}(1/2)^m i^k J^(1)_nu((1+q)|y|/mu)/|y|^nu S_k(y)
    with nu = m/2 + k - 1; the coefficient of |y|^{l-k} equals i^l alpha_{k,l}/[l]_q!.
    """
    _require_quantum(ctx)
    if k < 0 or l < 0:
        msg = f"Funk-Hecke coefficient needs k, l >= 0, got k={k}, l={l}"
        raise QDomainError(msg)
    if l < k or (l - k) % 2:
        return 0.0
    q, m, mu = ctx.q, ctx.m, ctx.mu
    nu = m / 2 + k - 1
    i = (l - k) // 2
    c = bessel_coefficients(ctx, nu, 1)[i]
    series_term = 2.0 * mu ** (m / 2 - 1) * q_gamma2(ctx, 0.5) ** m * ((1.0 + q) / mu) ** nu * c * mu ** (-2 * i)
    return (-1) ** i * series_term * factorial(q, l)


def techgamma_sum(ctx: QContext, l: int, alpha: float) -> float:  # noqa: E741
    """Sum_j (-1)^j q^{j(j-1)} binom_{q^2}(l, j) Gamma_{q^2}(alpha+l-j)/Gamma_{q^2}(alpha+1-j).

    The Gamma ratio is the finite product [alpha+1-j]...[alpha+l-1-j], valid for
    every real alpha; the sum vanishes for l > 0.

    Raises:
        QDomainError: If l < 0, or l = 0 at alpha = 0 where the single ratio has a pole.
    """
    q = ctx.q
    p = q * q
    if l < 0:
        msg = f"techgamma_sum needs l >= 0, got {l}"
        raise QDomainError(msg)
    if l == 0:
        if alpha == 0.0:
            msg = "Gamma(alpha)/Gamma(alpha+1) has a pole at alpha = 0"
            raise QDomainError(msg)
        return 1.0 / bracket(p, alpha)
    return sum(
        (-1) ** j * q ** (j * (j - 1)) * binomial(p, l, j) * rising(p, alpha + 1 - j, l - 1) for j in range(l + 1)
    )


def reproducing_constant(ctx: QContext, n: int) -> float:
    """C_n = [m/2+n-1]_{q^2} Gamma_{q^2}(m/2-1) / (2 Gamma_{q^2}(1/2)^m).

    Raises:
        QDomainError: If m <= 2, where Gamma_{q^2}(m/2-1) has a pole.
    """
    if ctx.m <= 2:
        msg = f"the reproducing kernel needs m >= 3, got m={ctx.m}"
        raise QDomainError(msg)
    m = ctx.m
    return bracket(ctx.q**2, m / 2 + n - 1) * q_gamma2(ctx, m / 2 - 1) / (2.0 * q_gamma2(ctx, 0.5) ** m)


def reproducing_check(ctx: QContext, n: int, k: int) -> float:
    """Sum_j c_j^{n,m/2-1} alpha_{k,n-2j} - delta_{kn}/C_n, zero when the kernel reproduces.

    Raises:
        QDomainError: If m <= 2 or a degree is negative.
    """
    _require_quantum(ctx)
    if n < 0 or k < 0:
        msg = f"reproducing check needs n, k >= 0, got n={n}, k={k}"
        raise QDomainError(msg)
    constant = reproducing_constant(ctx, n)
    weights = gegenbauer_coeffs(ctx, n, ctx.m / 2 - 1)
    total = sum(c * funk_hecke_alpha(ctx, k, n - 2 * j) for j, c in enumerate(weights))
    return total - (1.0 / constant if k == n else 0.0)
