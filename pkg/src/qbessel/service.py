"""Scaled q-Bessel functions x^-nu J_nu^(1) and x^-nu J_nu^(2).

Both are evaluated from their power series in (x/(1+q))^2. The first function
switches to the continuation J^(1) = q^{-nu^2} e_{q^2}(-(1-q)x^2/(1+q)) J^(2)
outside 0.95/(1-q), where its series stops converging well.
"""

import math
from collections.abc import Iterator
from functools import lru_cache

from src.qbessel.schemas import BesselKind, Branch, GeneratingSum
from src.qcore.schemas import QContext
from src.qcore.service import exp_big, exp_small, reciprocal_gamma2, sum_series
from src.qpolys.service import laguerre_q2, laguerre_q2inv
from src.shared.errors import QDomainError
from src.shared.logging import get_logger


logger = get_logger(__name__)

# Fraction of the convergence radius 1/(1-q) inside which the J^(1) series is used
J1_SERIES_SAFETY = 0.95


@lru_cache(maxsize=256)
def _log_coefficients(ctx: QContext, nu: float, kind: BesselKind) -> tuple[tuple[int, float], ...]:
    """Return (sign, log|c_i|) pairs; sign 0 marks an exactly vanishing coefficient.

    Logs keep the super-geometric q^{2i(i+nu)} decay of the second kind from
    underflowing before the powers of a large argument catch up with it.
    """
    q = ctx.q
    p = q * q
    log_prefactor = -nu * math.log(1.0 + q) + (nu * nu * math.log(q) if kind == 2 else 0.0)
    entries: list[tuple[int, float]] = []
    log_factorial = 0.0
    for i in range(ctx.precision.max_terms):
        if i > 0:
            log_factorial += math.log((1.0 - p**i) / (1.0 - p))
        rg = reciprocal_gamma2(ctx, i + nu + 1.0)
        if rg == 0.0:
            entries.append((0, -math.inf))
            continue
        log_abs = log_prefactor + math.log(abs(rg)) - log_factorial
        if kind == 2:
            log_abs += 2 * i * (i + nu) * math.log(q)
        sign = (-1) ** i * (1 if rg > 0 else -1)
        entries.append((sign, log_abs))
    return tuple(entries)


def bessel_coefficients(ctx: QContext, nu: float, kind: BesselKind) -> tuple[float, ...]:
    """Return c_i with x^-nu J_nu(x) = sum_i c_i (x/(1+q))^{2i}.

    Leading entries vanish when nu is a negative integer.
    """
    return tuple(sign * math.exp(log_abs) for sign, log_abs in _log_coefficients(ctx, float(nu), kind))


def _series(ctx: QContext, nu: float, kind: BesselKind, x: float) -> float:
    entries = _log_coefficients(ctx, float(nu), kind)
    y = (x / (1.0 + ctx.q)) ** 2
    if y == 0.0:
        return float(entries[0][0] * math.exp(entries[0][1])) if entries[0][0] else 0.0
    log_y = math.log(y)
    start = next((i for i, (sign, _) in enumerate(entries) if sign != 0), len(entries))
    if start == len(entries):
        return 0.0

    def terms() -> Iterator[float]:
        for i in range(start, len(entries)):
            sign, log_abs = entries[i]
            yield sign * math.exp(log_abs + i * log_y) if sign else 0.0

    return sum_series(terms(), ctx.precision, label=f"J^({kind}) series")


def besselJ2_scaled(ctx: QContext, nu: float, x: float) -> float:  # noqa: N802
    """Return x^-nu J_nu^(2)(x | q^2); entire in x."""
    return _series(ctx, nu, 2, x)


def besselJ1_scaled(ctx: QContext, nu: float, x: float, branch: Branch = "auto") -> float:  # noqa: N802
    """Return x^-nu J_nu^(1)(x | q^2), well defined for every real x.

    Args:
        ctx: Deformation context.
        nu: Order.
        x: Real argument.
        branch: ``series``, ``continuation`` or ``auto`` (series inside 0.95/(1-q)).
    """
    q = ctx.q
    radius = 1.0 / (1.0 - q)
    use_series = branch == "series" or (branch == "auto" and abs(x) < J1_SERIES_SAFETY * radius)
    if use_series:
        if abs(x) >= radius:
            msg = f"J^(1) series diverges at |x|={abs(x)} >= 1/(1-q)"
            raise QDomainError(msg)
        return _series(ctx, nu, 1, x)
    gaussian = exp_small(ctx, -(1.0 - q) * x * x / (1.0 + q), base=q * q)
    return q ** (-nu * nu) * gaussian * besselJ2_scaled(ctx, nu, x)


def _power(x: float, nu: float) -> float:
    if x < 0.0 and not float(nu).is_integer():
        msg = f"x^nu needs x >= 0 for non-integer nu={nu}"
        raise QDomainError(msg)
    if x == 0.0 and nu < 0.0:
        msg = "unscaled Bessel function is singular at 0 for nu < 0"
        raise QDomainError(msg)
    return x**nu if x != 0.0 else (1.0 if nu == 0.0 else 0.0)


def besselJ1(ctx: QContext, nu: float, x: float) -> float:  # noqa: N802
    """Return J_nu^(1)(x | q^2) = x^nu times the scaled function."""
    return _power(x, nu) * besselJ1_scaled(ctx, nu, x)


def besselJ2(ctx: QContext, nu: float, x: float) -> float:  # noqa: N802
    """Return J_nu^(2)(x | q^2) = x^nu times the scaled function."""
    return _power(x, nu) * besselJ2_scaled(ctx, nu, x)


def exp_imaginary_from_bessel(ctx: QContext, u: float) -> complex:
    """Return Gamma_{q^2}(1/2) (u/(1+q))^{1/2} [J_{-1/2}^(1)(u) + i J_{1/2}^(1)(u)] for u > 0.

    This equals e_q(iu).
    """
    if u <= 0.0:
        msg = f"the half-order decomposition needs u > 0, got {u}"
        raise QDomainError(msg)
    gamma_half = 1.0 / reciprocal_gamma2(ctx, 0.5)
    factor = gamma_half * math.sqrt(u / (1.0 + ctx.q))
    return factor * complex(besselJ1(ctx, -0.5, u), besselJ1(ctx, 0.5, u))


def generating_sum(ctx: QContext, kind: BesselKind, alpha: float, r: float, t: float, terms: int) -> GeneratingSum:
    """Truncate a Laguerre generating identity after ``terms`` terms.

    kind 1 compares (rt)^-alpha J_alpha^(1)(rt) with
    (1+q)^-alpha sum_j L_j(r^2/(1+q)|q^2)/Gamma(alpha+j+1) t^{2j}/(1+q)^j e_{q^2}(-q^2 t^2/(1+q)).

    kind 2 compares (rt)^-alpha J_alpha^(2)(qrt) with
    (1+q)^-alpha sum_j q^{(j+alpha)(j+1+alpha)} L_j(q^2 t^2/(1+q)|q^-2)/Gamma(alpha+j+1)
    r^{2j}/(1+q)^j E_{q^2}(-r^2/(1+q)).
    """
    q = ctx.q
    p = q * q
    scale = (1.0 + q) ** (-alpha)
    values = []
    for j in range(terms + 1):
        rg = reciprocal_gamma2(ctx, alpha + j + 1.0)
        if kind == 1:
            poly = laguerre_q2(ctx, j, alpha, r * r / (1.0 + q))
            values.append(scale * poly * rg * t ** (2 * j) / (1.0 + q) ** j)
        else:
            poly = laguerre_q2inv(ctx, j, alpha, p * t * t / (1.0 + q))
            weight = q ** ((j + alpha) * (j + 1 + alpha))
            values.append(scale * weight * poly * rg * r ** (2 * j) / (1.0 + q) ** j)
    if kind == 1:
        gaussian = exp_small(ctx, -p * t * t / (1.0 + q), base=p)
        bessel_side = besselJ1_scaled(ctx, alpha, r * t)
    else:
        gaussian = exp_big(ctx, -r * r / (1.0 + q), base=p)
        bessel_side = q**alpha * besselJ2_scaled(ctx, alpha, q * r * t)
    logger.debug("generating_sum_evaluated", kind=kind, alpha=alpha, terms=terms)
    return GeneratingSum(
        bessel_side=bessel_side,
        partial_sum=gaussian * sum(values[:terms]),
        first_omitted=abs(gaussian * values[terms]),
        terms=terms,
    )

