"""Checks of the q-Bessel functions and their Laguerre generating identities.

The scaled functions u^-nu J_nu accept every real order, so each recurrence
runs over the full order grid, including the neighbours nu - 1 = -1.5 and
nu - 1 = -1 where the unscaled functions are singular at the origin.
"""

from src.qbessel.service import besselJ1_scaled, besselJ2_scaled, exp_imaginary_from_bessel, generating_sum
from src.qcore.service import bracket, exp_small_complex, q_derivative
from src.verify.registry import CheckContext, check, rel_gap


ORDERS = (-0.5, 0.0, 0.5, 1.5)
POINTS = (0.3, 0.8, 1.5)
FLOOR = 1e-10


@check("qbessel.branch_overlap", tol=1e-10)
def branch_overlap(c: CheckContext) -> float:
    """Series and continuation of J^(1) agree at 0.9/(1-q)."""
    x = 0.9 / (1.0 - c.ctx.q)
    return max(
        rel_gap(
            besselJ1_scaled(c.ctx, nu, x, branch="series"),
            besselJ1_scaled(c.ctx, nu, x, branch="continuation"),
        )
        for nu in (*ORDERS, 1.0)
    )


@check("qbessel.exp_decomposition", tol=1e-10)
def exp_decomposition(c: CheckContext) -> float:
    """e_q(iu) from the half-order first-kind functions."""
    return max(rel_gap(exp_imaginary_from_bessel(c.ctx, u), exp_small_complex(c.ctx, 1j * u)) for u in (0.2, 0.5))


@check("qbessel.lowering_first_kind", tol=1e-10)
def lowering_first_kind(c: CheckContext) -> float:
    """d^q [u^-nu J^(1)_nu] = -u u^-(nu+1) J^(1)_{nu+1}."""
    ctx = c.ctx
    worst = 0.0
    for nu in ORDERS:
        for u in POINTS:
            lhs = q_derivative(ctx, lambda s, nu=nu: besselJ1_scaled(ctx, nu, s), u)
            worst = max(worst, rel_gap(lhs, -u * besselJ1_scaled(ctx, nu + 1.0, u), FLOOR))
    return worst


@check("qbessel.lowering_second_kind", tol=1e-10)
def lowering_second_kind(c: CheckContext) -> float:
    """The q^-1 derivative of u^-nu J^(2)_nu(qu) lowers the order."""
    ctx, q = c.ctx, c.ctx.q
    worst = 0.0
    for nu in ORDERS:
        for u in POINTS:
            lhs = q_derivative(ctx, lambda s, nu=nu: q**nu * besselJ2_scaled(ctx, nu, q * s), u, base=1.0 / q)
            rhs = -q * u * q ** (nu + 1.0) * besselJ2_scaled(ctx, nu + 1.0, q * u)
            worst = max(worst, rel_gap(lhs, rhs, FLOOR))
    return worst


@check("qbessel.three_term_first_kind", tol=1e-10)
def three_term_first_kind(c: CheckContext) -> float:
    """u^{1-nu}(J^(1)_{nu+1} + J^(1)_{nu-1})(u) = [2nu]_q (qu)^-nu J^(1)_nu(qu).

    At nu = 0 the right-hand side vanishes; the gap is then measured against
    the size of the two terms on the left.
    """
    ctx, q = c.ctx, c.ctx.q
    worst = 0.0
    for nu in ORDERS:
        for u in POINTS:
            upper = u * u * besselJ1_scaled(ctx, nu + 1.0, u)
            lower = besselJ1_scaled(ctx, nu - 1.0, u)
            rhs = bracket(q, 2 * nu) * besselJ1_scaled(ctx, nu, q * u)
            worst = max(worst, rel_gap(upper + lower, rhs, max(abs(upper), abs(lower))))
    return worst


@check("qbessel.three_term_second_kind", tol=1e-10)
def three_term_second_kind(c: CheckContext) -> float:
    """u^{1-nu}(J^(2)_{nu+1} + J^(2)_{nu-1})(qu) = [2nu]_q (qu)^-nu J^(2)_nu(u).

    In scaled form: q^{nu+1} u^2 j_{nu+1}(qu) + q^{nu-1} j_{nu-1}(qu) = [2nu]_q q^-nu j_nu(u)
    with j_nu = u^-nu J^(2)_nu.
    """
    ctx, q = c.ctx, c.ctx.q
    worst = 0.0
    for nu in ORDERS:
        for u in POINTS:
            upper = q ** (nu + 1.0) * u * u * besselJ2_scaled(ctx, nu + 1.0, q * u)
            lower = q ** (nu - 1.0) * besselJ2_scaled(ctx, nu - 1.0, q * u)
            rhs = bracket(q, 2 * nu) * q**-nu * besselJ2_scaled(ctx, nu, u)
            worst = max(worst, rel_gap(upper + lower, rhs, max(abs(upper), abs(lower))))
    return worst


@check("qbessel.raising_second_kind", tol=1e-10)
def raising_second_kind(c: CheckContext) -> float:
    """d^q [J^(2)_nu(u) u^nu] = q^nu J^(2)_{nu-1}(qu) u^nu."""
    ctx, q = c.ctx, c.ctx.q
    worst = 0.0
    for nu in ORDERS:
        for u in POINTS:
            lhs = q_derivative(ctx, lambda s, nu=nu: s ** (2 * nu) * besselJ2_scaled(ctx, nu, s), u)
            rhs = q ** (2 * nu - 1) * u ** (2 * nu - 1) * besselJ2_scaled(ctx, nu - 1.0, q * u)
            worst = max(worst, rel_gap(lhs, rhs, FLOOR))
    return worst


@check("qbessel.mixed_second_kind", tol=1e-10)
def mixed_second_kind(c: CheckContext) -> float:
    """d^q [u^{nu+1} J^(2)_{nu-1}(u)] = [2nu]_q u^nu J^(2)_{nu-1}(u) - q^{nu+1} u^{nu+1} J^(2)_nu(qu)."""
    ctx, q = c.ctx, c.ctx.q
    worst = 0.0
    for nu in ORDERS:
        for u in POINTS:
            lhs = q_derivative(ctx, lambda s, nu=nu: s ** (2 * nu) * besselJ2_scaled(ctx, nu - 1.0, s), u)
            first = bracket(q, 2 * nu) * u ** (2 * nu - 1) * besselJ2_scaled(ctx, nu - 1.0, u)
            second = q ** (2 * nu + 1) * u ** (2 * nu + 1) * besselJ2_scaled(ctx, nu, q * u)
            worst = max(worst, rel_gap(lhs, first - second, max(abs(first), abs(second))))
    return worst


@check("qbessel.raising_first_kind", tol=1e-10)
def raising_first_kind(c: CheckContext) -> float:
    """d^q [J^(1)_nu(u) u^nu] = J^(1)_{nu-1}(u) u^nu."""
    ctx = c.ctx
    worst = 0.0
    for nu in ORDERS:
        for u in POINTS:
            lhs = q_derivative(ctx, lambda s, nu=nu: s ** (2 * nu) * besselJ1_scaled(ctx, nu, s), u)
            worst = max(worst, rel_gap(lhs, u ** (2 * nu - 1) * besselJ1_scaled(ctx, nu - 1.0, u), FLOOR))
    return worst


@check("qbessel.generating_identities", tol=1e-10)
def generating_identities(c: CheckContext) -> float:
    """Truncated Laguerre generating sums converge to the Bessel side."""
    worst = 0.0
    for kind in (1, 2):
        for alpha in (0.0, 0.5):
            result = generating_sum(c.ctx, kind, alpha, 0.6, 0.5, 30)  # type: ignore[arg-type]
            gap = abs(result.bessel_side - result.partial_sum) - 10 * result.first_omitted
            worst = max(worst, max(gap, 0.0) / max(abs(result.bessel_side), 1e-300))
    return worst
