"""Scalar q-calculus on a geometric grid.

Raw helpers (``bracket``, ``factorial``, ``pochhammer``) take an explicit base so
that the q, q^2 and q^-2 variants used across the package share one
implementation. The context-level operations default the base to ``ctx.q``.
"""

import math
import time
import warnings
from collections import deque
from collections.abc import Callable, Iterable
from typing import Literal

from src.qcore.schemas import JacksonResult, JacksonSpec, QContext, SeriesPolicy
from src.shared.errors import DivergenceWarning, PoleError, QDomainError, TruncationError
from src.shared.logging import get_logger


logger = get_logger(__name__)

# Factors of an infinite product closer to 1 than this are dropped
PRODUCT_EPS = 1e-17
# Direct e_q series is used only inside this fraction of its radius of convergence
EXP_SERIES_SAFETY = 0.95
MAX_PRODUCT_FACTORS = 100_000
# A factor 1 - u this close to zero (relative to u) is a zero of the product
ZERO_FACTOR_TOL = 64 * 2.220446049250313e-16

RealFunction = Callable[[float], float]


# ---------------------------------------------------------------------------
# Base-explicit helpers
# ---------------------------------------------------------------------------


def bracket(base: float, u: float) -> float:
    """Return [u]_base = (base^u - 1)/(base - 1)."""
    return (base**u - 1.0) / (base - 1.0)


def factorial(base: float, n: int) -> float:
    """Return [n]_base! for integer n >= 0."""
    if n < 0:
        msg = f"q-factorial needs n >= 0, got {n}"
        raise QDomainError(msg)
    result = 1.0
    for i in range(1, n + 1):
        result *= bracket(base, i)
    return result


def binomial(base: float, n: int, j: int) -> float:
    """Return the q-binomial coefficient [n]!/([j]![n-j]!), zero outside 0 <= j <= n."""
    if j < 0 or j > n:
        return 0.0
    return factorial(base, n) / (factorial(base, j) * factorial(base, n - j))


def rising(base: float, u: float, count: int) -> float:
    """Return prod_{i=0}^{count-1} [u+i]_base, i.e. Gamma(u+count)/Gamma(u) without the poles."""
    result = 1.0
    for i in range(count):
        result *= bracket(base, u + i)
    return result


def pochhammer(base: float, u: complex, k: int | None) -> complex:
    """Return (u; base)_k; ``k=None`` is the infinite product.

    The infinite product needs 0 < base < 1 and stops once the factors agree with
    1 to machine precision.
    """
    if k is not None:
        result: complex = 1.0
        for i in range(k):
            factor = 1.0 - u * base**i
            if abs(factor) <= ZERO_FACTOR_TOL * abs(u * base**i):
                return 0.0
            result *= factor
        return result
    if not 0.0 < base < 1.0:
        msg = f"infinite q-product needs 0 < base < 1, got {base}"
        raise QDomainError(msg)
    result = 1.0
    factor_scale = abs(u)
    for _ in range(MAX_PRODUCT_FACTORS):
        if factor_scale < PRODUCT_EPS:
            return result
        factor = 1.0 - u
        if abs(factor) <= ZERO_FACTOR_TOL * factor_scale:
            return 0.0
        result *= factor
        u *= base
        factor_scale *= base
    msg = f"infinite q-product did not settle after {MAX_PRODUCT_FACTORS} factors"
    raise TruncationError(msg, partial_sum=abs(result), terms=MAX_PRODUCT_FACTORS)


def sum_series(terms: Iterable[float], policy: SeriesPolicy, *, label: str = "series") -> float:
    """Sum a convergent series under ``policy``.

    A term is negligible when |term| <= rel_tol * max(|partial sum|, largest |term| so far);
    the sum ends after ``consecutive_small`` negligible terms in a row.

    Raises:
        TruncationError: If ``max_terms`` terms are consumed without settling.
    """
    total = 0.0
    largest = 0.0
    small_run = 0
    count = 0
    for term in terms:
        total += term
        count += 1
        size = abs(term)
        largest = max(largest, size)
        if size <= policy.rel_tol * max(abs(total), largest):
            small_run += 1
            if small_run >= policy.consecutive_small:
                return total
        else:
            small_run = 0
        if count >= policy.max_terms:
            break
    else:
        return total
    msg = f"{label} did not settle within {policy.max_terms} terms"
    raise TruncationError(msg, partial_sum=total, terms=count)


# ---------------------------------------------------------------------------
# Context-level operations
# ---------------------------------------------------------------------------


def q_bracket(ctx: QContext, u: float, base: float | None = None) -> float:
    """Return [u]_q = (q^u - 1)/(q - 1)."""
    return bracket(ctx.q if base is None else base, u)


def q_pochhammer(ctx: QContext, u: float, k: int | None, base: float | None = None) -> float:
    """Return (u; q)_k, with ``k=None`` for the infinite product."""
    return pochhammer(ctx.q if base is None else base, u, k).real


def reciprocal_gamma2(ctx: QContext, t: float) -> float:
    """Return 1/Gamma_{q^2}(t) for every real t; zero at the nonpositive integers."""
    if t <= 0 and float(t).is_integer():
        return 0.0
    p = ctx.q * ctx.q
    numerator = pochhammer(p, p**t, None).real
    return numerator * (1.0 - p) ** (t - 1.0) / pochhammer(p, p, None).real


def q_gamma2(ctx: QContext, t: float) -> float:
    """Return Gamma_{q^2}(t) = (q^2;q^2)_inf / (q^{2t};q^2)_inf * (1-q^2)^{1-t}.

    Raises:
        QDomainError: If t <= 0.
    """
    if t <= 0:
        msg = f"q_gamma2 is defined here for t > 0, got {t}"
        raise QDomainError(msg)
    return 1.0 / reciprocal_gamma2(ctx, t)


def q_derivative(
    ctx: QContext,
    f: RealFunction,
    t: float,
    *,
    at_zero: float | None = None,
    base: float | None = None,
) -> float:
    """Return the q-derivative (f(qt) - f(t))/((q-1)t).

    Args:
        ctx: Deformation context.
        f: Function to differentiate.
        t: Evaluation point.
        at_zero: Linear Taylor coefficient of f, used when t == 0.
        base: Replaces q (for instance q^-1 or q^2).

    Raises:
        QDomainError: If t == 0 and no ``at_zero`` value was supplied.
    """
    b = ctx.q if base is None else base
    if t == 0.0:
        if at_zero is None:
            msg = "q-derivative at t=0 needs the series coefficient of the caller"
            raise QDomainError(msg)
        return at_zero
    return (f(b * t) - f(t)) / ((b - 1.0) * t)


def q_integrate_finite(ctx: QContext, f: RealFunction, a: float, base: float | None = None) -> float:
    """Return the Jackson integral over [0, a]: (1-q) a sum_k f(q^k a) q^k.

    Raises:
        QDomainError: If a <= 0.
        TruncationError: If the sum does not settle.
    """
    if a <= 0:
        msg = f"upper limit must be positive, got {a}"
        raise QDomainError(msg)
    b = ctx.q if base is None else base
    terms = (f(a * b**k) * b**k for k in range(ctx.precision.max_terms + 1))
    return (1.0 - b) * a * sum_series(terms, ctx.precision, label="finite Jackson sum")


def _scan_shells(
    f: RealFunction,
    gamma: float,
    b: float,
    ks: Iterable[int],
    policy: SeriesPolicy,
    *,
    minimum: int,
    fixed: bool,
) -> tuple[float, float, int, bool]:
    """Sum f(b^k gamma) b^k over ``ks``; returns (sum, tail, last k, settled).

    With ``fixed`` the whole range is summed and only the last shell is tested.
    """
    total = 0.0
    largest = 0.0
    small_run = 0
    tail: deque[float] = deque(maxlen=policy.consecutive_small)
    last_k = 0
    count = 0
    for k in ks:
        weight = b**k
        try:
            term = f(gamma * weight) * weight
        except (OverflowError, ZeroDivisionError):
            return total, math.inf, k, False
        if not math.isfinite(term):
            return total, math.inf, k, False
        total += term
        count += 1
        last_k = k
        tail.append(abs(term))
        largest = max(largest, abs(term))
        if abs(term) <= policy.rel_tol * max(abs(total), largest):
            small_run += 1
            if not fixed and small_run >= policy.consecutive_small and count >= minimum:
                return total, sum(tail), last_k, True
        else:
            small_run = 0
    settled = fixed and (count == 0 or small_run > 0)
    return total, sum(tail), last_k, settled


def jackson_infinite(
    ctx: QContext,
    f: RealFunction,
    spec: JacksonSpec | None = None,
    base: float | None = None,
) -> JacksonResult:
    """Sum the infinite Jackson integral (1-q) gamma sum_k f(q^k gamma) q^k.

    The fine side runs k = 0, 1, ... and the coarse side k = -1, -2, ...; unset
    bounds are found adaptively. A window that excludes k = 0 starts its one
    side at the nearer bound. A coarse side that never becomes negligible
    (or produces a non-finite value) yields ``decayed=False`` and a
    ``DivergenceWarning``.
    """
    spec = spec or JacksonSpec()
    b = ctx.q if base is None else base
    policy = ctx.precision
    start_time = time.perf_counter()

    min_fine = max(1, math.ceil(math.log(policy.rel_tol) / math.log(b)))
    # a window on one side of the anchor shell leaves the other side empty
    fine_start = 0 if spec.k_lo is None else max(spec.k_lo, 0)
    coarse_start = -1 if spec.k_hi is None else min(spec.k_hi, -1)
    if spec.k_hi is not None:
        fine_ks = range(fine_start, spec.k_hi + 1)
        fine_fixed = True
    else:
        fine_ks = range(fine_start, fine_start + policy.max_terms + min_fine)
        fine_fixed = False
    fine, fine_tail, k_hi, fine_ok = _scan_shells(
        f, spec.gamma, b, fine_ks, policy, minimum=min_fine, fixed=fine_fixed
    )

    if spec.k_lo is not None:
        coarse_ks = range(coarse_start, spec.k_lo - 1, -1)
        coarse_fixed = True
    else:
        coarse_ks = range(coarse_start, coarse_start - policy.max_terms, -1)
        coarse_fixed = False
    coarse, coarse_tail, k_lo, coarse_ok = _scan_shells(
        f, spec.gamma, b, coarse_ks, policy, minimum=1, fixed=coarse_fixed
    )
    if not fine_ks:
        k_hi = fine_ks.stop - 1
    if not coarse_ks:
        k_lo = coarse_ks.stop + 1

    value = (1.0 - b) * spec.gamma * (fine + coarse)
    decayed = fine_ok and coarse_ok
    if not decayed:
        logger.warning(
            "jackson_divergence_detected",
            gamma=spec.gamma,
            base=b,
            k_lo=k_lo,
            k_hi=k_hi,
            tail=coarse_tail,
        )
        warnings.warn(
            f"infinite Jackson sum with gamma={spec.gamma} did not decay by k={k_lo}",
            DivergenceWarning,
            stacklevel=2,
        )
    logger.debug(
        "jackson_infinite_completed",
        k_lo=k_lo,
        k_hi=k_hi,
        decayed=decayed,
        duration_ms=(time.perf_counter() - start_time) * 1000,
    )
    return JacksonResult(
        value=value,
        tail_estimate=(1.0 - b) * spec.gamma * (fine_tail + coarse_tail),
        k_lo=k_lo,
        k_hi=k_hi,
        decayed=decayed,
    )


def q_integrate_infinite(
    ctx: QContext,
    f: RealFunction,
    spec: JacksonSpec | None = None,
    base: float | None = None,
) -> float:
    """Return the value of the infinite Jackson integral; see ``jackson_infinite``."""
    return jackson_infinite(ctx, f, spec, base).value


# ---------------------------------------------------------------------------
# q-exponentials
# ---------------------------------------------------------------------------


def _exp_small_series(b: float, t: float, policy: SeriesPolicy) -> float:
    def terms() -> Iterable[float]:
        term = 1.0
        for n in range(1, policy.max_terms + 1):
            yield term
            term *= t / bracket(b, n)

    return sum_series(terms(), policy, label="e_q series")


def _exp_big_series(b: float, t: float, policy: SeriesPolicy) -> float:
    def terms() -> Iterable[float]:
        term = 1.0
        for n in range(1, policy.max_terms + 1):
            yield term
            term *= b ** (n - 1) * t / bracket(b, n)

    return sum_series(terms(), policy, label="E_q series")


def exp_big(
    ctx: QContext,
    t: float,
    base: float | None = None,
    method: Literal["auto", "series", "product"] = "auto",
) -> float:
    """Return E_q(t) = sum q^{n(n-1)/2} t^n/[n]_q! = (-(1-q)t; q)_inf (entire in t)."""
    b = ctx.q if base is None else base
    if method == "series":
        return _exp_big_series(b, t, ctx.precision)
    return pochhammer(b, -(1.0 - b) * t, None).real


def exp_small(ctx: QContext, t: float, base: float | None = None) -> float:
    """Return e_q(t) = sum t^n/[n]_q!, continued outside its disc as 1/E_q(-t).

    Raises:
        PoleError: If t is a pole q^-k/(1-q).
    """
    b = ctx.q if base is None else base
    ratio = (1.0 - b) * abs(t)
    if ratio < EXP_SERIES_SAFETY and ratio ** ctx.precision.max_terms < ctx.precision.rel_tol:
        return _exp_small_series(b, t, ctx.precision)
    denominator = exp_big(ctx, -t, base=b)
    if denominator == 0.0 or _near_pole(b, t):
        msg = f"e_q has a pole at t={t}"
        raise PoleError(msg)
    return 1.0 / denominator


def _near_pole(b: float, t: float) -> bool:
    """True when (1-b)t is within round-off of some b^-k."""
    scaled = (1.0 - b) * t
    if scaled <= 0.0:
        return False
    k = math.log(scaled) / math.log(1.0 / b)
    nearest = round(k)
    return nearest >= 0 and abs(scaled - b ** (-nearest)) <= 1e-14 * scaled


def exp_big_complex(ctx: QContext, z: complex, base: float | None = None) -> complex:
    """Return E_q(z) for complex z through the product form."""
    b = ctx.q if base is None else base
    return complex(pochhammer(b, -(1.0 - b) * z, None))


def exp_small_complex(ctx: QContext, z: complex, base: float | None = None) -> complex:
    """Return e_q(z) = 1/E_q(-z) for complex z.

    Raises:
        PoleError: If the product vanishes.
    """
    denominator = exp_big_complex(ctx, -z, base)
    if denominator == 0:
        msg = f"e_q has a pole at z={z}"
        raise PoleError(msg)
    return 1.0 / denominator
