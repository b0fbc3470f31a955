"""Finite-sum evaluation of the q-orthogonal polynomials.

Degrees used in the package stay small, so every polynomial is summed directly
from its defining formula; no recurrences are involved. Pochhammer quotients
(q^{2a}; q^2)_n / (1-q^2)^n are evaluated as products of q^2-brackets.
"""

from src.qcore.schemas import QContext
from src.qcore.service import factorial, rising
from src.shared.errors import QDomainError


def _check_alpha(alpha: float) -> None:
    if alpha <= -1.0:
        msg = f"q-Laguerre polynomials need alpha > -1, got {alpha}"
        raise QDomainError(msg)


def _check_degree(n: int) -> None:
    if n < 0:
        msg = f"degree must be >= 0, got {n}"
        raise QDomainError(msg)


def hermite(ctx: QContext, k: int, t: float) -> float:
    """Return the q-Hermite polynomial H_k(t).

    H_k(t) = sum_j (-1)^j [k]_q! / ([k-2j]_q! [j]_{q^2}!) q^{j(j+1)} ((1+q)t)^{k-2j}
    """
    _check_degree(k)
    q = ctx.q
    p = q * q
    top = factorial(q, k)
    scaled = (1.0 + q) * t
    total = 0.0
    for j in range(k // 2 + 1):
        coefficient = top / (factorial(q, k - 2 * j) * factorial(p, j))
        total += (-1) ** j * coefficient * q ** (j * (j + 1)) * scaled ** (k - 2 * j)
    return total


def laguerre_sum(base: float, j: int, alpha: float, u: float) -> float:
    """Return L_j^(alpha)(u | base^2) from its finite sum.

    With base = q this is the q^2 variant; with base = 1/q it is the q^-2 variant.
    """
    _check_degree(j)
    _check_alpha(alpha)
    p = base * base
    total = 0.0
    for i in range(j + 1):
        n = j - i
        weight = base ** (n * (n + 1)) / (factorial(p, n) * factorial(p, i))
        total += weight * (-u) ** i * rising(p, i + alpha + 1.0, n)
    return total


def laguerre_q2(ctx: QContext, j: int, alpha: float, u: float) -> float:
    """Return L_j^(alpha)(u | q^2).

    Raises:
        QDomainError: If alpha <= -1.
    """
    return laguerre_sum(ctx.q, j, alpha, u)


def laguerre_q2inv(ctx: QContext, j: int, alpha: float, u: float) -> float:
    """Return L_j^(alpha)(u | q^-2), written with q^2-brackets only.

    L_j(u | q^-2) = q^{-j(j+1+2 alpha)} sum_i q^{2i(i+alpha)} (-u)^i
                    prod_{s<j-i} [i+alpha+1+s]_{q^2} / ([j-i]_{q^2}! [i]_{q^2}!)

    Raises:
        QDomainError: If alpha <= -1.
    """
    _check_degree(j)
    _check_alpha(alpha)
    q = ctx.q
    p = q * q
    total = 0.0
    for i in range(j + 1):
        weight = q ** (2 * i * (i + alpha)) / (factorial(p, j - i) * factorial(p, i))
        total += weight * (-u) ** i * rising(p, i + alpha + 1.0, j - i)
    return q ** (-j * (j + 1 + 2 * alpha)) * total


def gegenbauer(ctx: QContext, n: int, lam: float, t: float) -> float:
    """Return the q-Gegenbauer polynomial C_n^lambda(q; t)."""
    return sum(c * ((1.0 + ctx.q) * t) ** (n - 2 * j) for j, c in enumerate(_gegenbauer_weights(ctx, n, lam)))


def _gegenbauer_weights(ctx: QContext, n: int, lam: float) -> list[float]:
    _check_degree(n)
    q = ctx.q
    p = q * q
    return [
        (-1) ** j * q ** (j * (j - 1)) * rising(p, lam, n - j) / (factorial(p, j) * factorial(q, n - 2 * j))
        for j in range(n // 2 + 1)
    ]


def gegenbauer_coeffs(ctx: QContext, n: int, lam: float) -> list[float]:
    """Return c_j, the coefficient of t^{n-2j} in C_n^lambda(q; mu t/(1+q))."""
    mu = ctx.mu
    return [w * mu ** (n - 2 * j) for j, w in enumerate(_gegenbauer_weights(ctx, n, lam))]


def monomial_to_laguerre_inv(ctx: QContext, j: int, nu: float) -> list[float]:
    """Expand t^{2j}/((1+q)^j [j]_{q^2}!) in the basis L_i^(nu)(q^2 t^2/(1+q) | q^-2).

    Returns:
        Coefficients b_0..b_j.
    """
    _check_degree(j)
    _check_alpha(nu)
    q = ctx.q
    p = q * q
    coefficients = []
    for i in range(j + 1):
        n = j - i
        exponent = n * (n + 1) + (i + 1) * (i + 2 * nu + 2) - 2 * (j + 1) * (j + nu + 1)
        coefficients.append((-1) ** i * rising(p, i + nu + 1.0, n) / factorial(p, n) * q**exponent)
    return coefficients


def laguerre_polynomial_coefficients(ctx: QContext, j: int, alpha: float, scale: float = 1.0) -> list[float]:
    """Return the power coefficients in u of L_j^(alpha)(scale * u | q^2)."""
    _check_degree(j)
    _check_alpha(alpha)
    q = ctx.q
    p = q * q
    coefficients = []
    for i in range(j + 1):
        n = j - i
        weight = q ** (n * (n + 1)) / (factorial(p, n) * factorial(p, i))
        coefficients.append(weight * (-scale) ** i * rising(p, i + alpha + 1.0, n))
    return coefficients

