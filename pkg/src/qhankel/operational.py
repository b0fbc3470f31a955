"""Operational rules of the two q-Hankel transforms.

Each function returns (lhs, rhs) at one point so callers can compare the two
sides by quadrature. With kappa = (1+q)/mu:

    first transform H-bar, order nu and scale beta
      (i)   t^2 H-bar_{nu+1}[f](t) + H-bar_{nu-1}[r^2 f](t) = mu [nu]_{q^2} H-bar_nu[f](qt)
      (ii)  d^q_t H-bar_nu[f](t) = -kappa t H-bar_{nu+1}[f](t)
      (iii) H-bar_nu[r^-1 d^{1/q}_r f](t) = -q kappa H-bar_{nu-1}[f](t), f(a/q) = 0

    second transform H, order nu and anchor gamma
      (i)   r^2 H_{nu+1}[f](r) + H_{nu-1}[t^2 f](r) = mu [nu]_{q^2} q^{-2nu} H_nu[f](r/q)
      (ii)  d^{1/q}_r H_nu[f](r) = -q kappa r H_{nu+1}[f](r)
      (iii) H_nu[t^-1 d^q_t f](r) = -kappa H_{nu-1}[f](r)
      (iv)  H_{nu-1}[t d^q_t f](r) = kappa r^2 H_nu[f](r) - [2nu]_q q^{-2nu} H_{nu-1}[f](r/q)

Orders nu - 1 must stay above -1.
"""

from typing import Literal

from src.qcore.schemas import JacksonSpec, QContext
from src.qcore.service import RealFunction, bracket, q_derivative
from src.qhankel.service import first_support, hankel1_at, hankel2_at
from src.shared.errors import QDomainError


FirstRule = Literal["three_term", "lowering", "derivative"]
SecondRule = Literal["three_term", "lowering", "derivative", "euler"]


def _check_order(nu: float, rule: str) -> None:
    if rule != "lowering" and nu <= 0.0:
        msg = f"rule {rule!r} reaches order nu-1 and needs nu > 0, got {nu}"
        raise QDomainError(msg)


def first_rule(
    ctx: QContext, rule: FirstRule, nu: float, beta: float, f: RealFunction, t: float
) -> tuple[float, float]:
    """Both sides of one operational rule of the first transform at t.

    For ``derivative`` the input must vanish at q^-1 sqrt(mu/((1-q^2) beta)).

    Raises:
        QDomainError: If the rule needs nu > 0, or the boundary value of f is not zero.
    """
    _check_order(nu, rule)
    q = ctx.q
    kappa = (1.0 + q) / ctx.mu
    if rule == "three_term":
        lhs = t * t * hankel1_at(ctx, nu + 1.0, beta, f, t) + hankel1_at(ctx, nu - 1.0, beta, lambda r: r * r * f(r), t)
        return lhs, ctx.mu * bracket(q * q, nu) * hankel1_at(ctx, nu, beta, f, q * t)
    if rule == "lowering":
        lhs = q_derivative(ctx, lambda s: hankel1_at(ctx, nu, beta, f, s), t)
        return lhs, -kappa * t * hankel1_at(ctx, nu + 1.0, beta, f, t)
    edge = first_support(ctx, beta) / q
    if abs(f(edge)) > 1e-12 * max(abs(f(0.0)), 1.0):
        msg = f"the derivative rule needs f to vanish at {edge}, got {f(edge)}"
        raise QDomainError(msg)

    def derivative(r: float) -> float:
        return q_derivative(ctx, f, r, base=1.0 / q) / r

    return hankel1_at(ctx, nu, beta, derivative, t), -q * kappa * hankel1_at(ctx, nu - 1.0, beta, f, t)


def second_rule(
    ctx: QContext, rule: SecondRule, nu: float, f: RealFunction, r: float, gamma: float = 1.0
) -> tuple[float, float]:
    """Both sides of one operational rule of the second transform at r.

    Raises:
        QDomainError: If the rule needs nu > 0.
    """
    _check_order(nu, rule)
    q = ctx.q
    kappa = (1.0 + q) / ctx.mu
    grid = JacksonSpec(gamma=gamma)

    def h(order: float, g: RealFunction, x: float) -> float:
        return hankel2_at(ctx, order, grid, g, x)

    if rule == "three_term":
        lhs = r * r * h(nu + 1.0, f, r) + h(nu - 1.0, lambda t: t * t * f(t), r)
        return lhs, ctx.mu * bracket(q * q, nu) * q ** (-2 * nu) * h(nu, f, r / q)
    if rule == "lowering":
        lhs = q_derivative(ctx, lambda s: h(nu, f, s), r, base=1.0 / q)
        return lhs, -q * kappa * r * h(nu + 1.0, f, r)
    if rule == "derivative":
        return h(nu, lambda t: q_derivative(ctx, f, t) / t, r), -kappa * h(nu - 1.0, f, r)
    lhs = h(nu - 1.0, lambda t: t * q_derivative(ctx, f, t), r)
    rhs = kappa * r * r * h(nu, f, r) - bracket(q, 2 * nu) * q ** (-2 * nu) * h(nu - 1.0, f, r / q)
    return lhs, rhs
