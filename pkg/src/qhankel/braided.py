"""Fourier pair on the braided line (m = 1).

The forward transform integrates against e_q(-ixy) over [-1/sqrt(1-q), 1/sqrt(1-q)];
the inverse integrates against E_q(iqyx) over the two-sided infinite grid
{+-q^k delta}. Complex integrands are split into real and imaginary parts.
"""

import math
from collections.abc import Callable, Sequence

from src.qcore.schemas import JacksonSpec, QContext
from src.qcore.service import (
    exp_big,
    exp_big_complex,
    exp_small,
    exp_small_complex,
    jackson_infinite,
    q_integrate_finite,
    reciprocal_gamma2,
)
from src.qpolys.service import hermite
from src.shared.logging import get_logger


logger = get_logger(__name__)

ComplexFunction = Callable[[float], complex]


def _two_sided_finite(ctx: QContext, g: ComplexFunction, a: float) -> complex:
    def real(x: float) -> float:
        return (g(x) + g(-x)).real

    def imag(x: float) -> float:
        return (g(x) + g(-x)).imag

    return complex(q_integrate_finite(ctx, real, a), q_integrate_finite(ctx, imag, a))


def _two_sided_infinite(ctx: QContext, g: ComplexFunction, delta: float) -> complex:
    grid = JacksonSpec(gamma=delta)

    def real(y: float) -> float:
        return (g(y) + g(-y)).real

    def imag(y: float) -> float:
        return (g(y) + g(-y)).imag

    return complex(jackson_infinite(ctx, real, grid).value, jackson_infinite(ctx, imag, grid).value)


def weighted_hermite(ctx: QContext, k: int, x: float) -> float:
    """H_k(x/sqrt(1+q)) E_{q^2}(-x^2/(1+q))."""
    q = ctx.q
    return hermite(ctx, k, x / math.sqrt(1.0 + q)) * exp_big(ctx, -x * x / (1.0 + q), base=q * q)


def monomial_gaussian_1d(ctx: QContext, k: int, y: float) -> float:
    """y^k e_{q^2}(-q^2 y^2/(1+q))."""
    q = ctx.q
    p = q * q
    return y**k * exp_small(ctx, -p * y * y / (1.0 + q), base=p)


def forward_constant(ctx: QContext, k: int) -> complex:
    """Image coefficient of the weighted H_k: (q+1)^{(k-1)/2} i^{-k} q^{(k+1)(k+2)/2}."""
    q = ctx.q
    return (q + 1.0) ** ((k - 1) / 2) * (1j) ** (-k) * q ** ((k + 1) * (k + 2) / 2)


def forward_function(ctx: QContext, g: ComplexFunction, y: float) -> complex:
    """(1/(2 Gamma_{q^2}(1/2))) int_{-a}^{a} g(x) e_q(-ixy) d_q x with a = 1/sqrt(1-q)."""
    a = 1.0 / math.sqrt(1.0 - ctx.q)
    norm = 0.5 * reciprocal_gamma2(ctx, 0.5)
    return norm * _two_sided_finite(ctx, lambda x: g(x) * exp_small_complex(ctx, -1j * x * y), a)


def delta_constant(ctx: QContext, delta: float = 1.0) -> float:
    """C_delta = 2q (1+q)^{-1/2} int_0^{delta inf} e_{q^2}(-q^2 y^2/(1+q)) d_q y."""
    q = ctx.q
    integral = jackson_infinite(ctx, lambda y: monomial_gaussian_1d(ctx, 0, y), JacksonSpec(gamma=delta)).value
    return 2.0 * q / math.sqrt(1.0 + q) * integral


def inverse_function(ctx: QContext, g: ComplexFunction, x: float, delta: float = 1.0) -> complex:
    """(1/C_delta) int_{-delta inf}^{delta inf} g(y) E_q(iqyx) d_q y."""
    q = ctx.q
    raw = _two_sided_infinite(ctx, lambda y: g(y) * exp_big_complex(ctx, 1j * q * y * x), delta)
    return raw / delta_constant(ctx, delta)


def fourier_braided_line(
    ctx: QContext,
    coefficients: Sequence[complex],
    direction: str,
    *,
    delta: float = 1.0,
) -> ComplexFunction:
    """Return the transform of a finite combination by quadrature.

    Forward input is sum_k a_k H_k(x/sqrt(1+q)) E_{q^2}(-x^2/(1+q)); inverse input
    is sum_k b_k y^k e_{q^2}(-q^2 y^2/(1+q)).

    Raises:
        ValueError: If ``direction`` is neither ``forward`` nor ``inverse``.
    """
    coeffs = list(coefficients)
    if direction == "forward":

        def source(x: float) -> complex:
            return sum(c * weighted_hermite(ctx, k, x) for k, c in enumerate(coeffs) if c != 0)

        return lambda y: forward_function(ctx, source, y)
    if direction == "inverse":

        def image(y: float) -> complex:
            return sum(c * monomial_gaussian_1d(ctx, k, y) for k, c in enumerate(coeffs) if c != 0)

        return lambda x: inverse_function(ctx, image, x, delta)
    msg = f"direction must be 'forward' or 'inverse', got {direction!r}"
    raise ValueError(msg)


def forward_closed(ctx: QContext, coefficients: Sequence[complex]) -> list[complex]:
    """Monomial-Gaussian coefficients of the forward image of a Hermite combination."""
    return [c * forward_constant(ctx, k) for k, c in enumerate(coefficients)]


def inverse_closed(ctx: QContext, coefficients: Sequence[complex]) -> list[complex]:
    """Hermite coefficients of the inverse image of a monomial-Gaussian combination."""
    return [c / forward_constant(ctx, k) for k, c in enumerate(coefficients)]


def multiplication_rule(ctx: QContext, k: int, y: float) -> tuple[complex, complex]:
    """Return (F[x f](y), i d^q_y F[f](y)) for f the weighted H_k; both sides agree.

    F[f] is taken from its closed form, F[x f] by quadrature.
    """
    q = ctx.q
    lhs = forward_function(ctx, lambda x: x * weighted_hermite(ctx, k, x), y)

    def image(s: float) -> complex:
        return forward_constant(ctx, k) * monomial_gaussian_1d(ctx, k, s)

    rhs = 1j * (image(q * y) - image(y)) / ((q - 1.0) * y)
    logger.debug("braided_multiplication_rule", k=k, y=y, gap=abs(lhs - rhs))
    return lhs, rhs
