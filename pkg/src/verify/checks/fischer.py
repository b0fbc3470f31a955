"""Checks of the Fischer-block operator algebra and the Fourier transforms on it."""

from src.fischer.fourier import fourier_forward, fourier_inverse
from src.fischer.schemas import FischerDocument, FischerElement, GaussTag
from src.fischer.service import (
    coefficient_residual,
    element,
    hamiltonian_exact,
    op_euler,
    op_laplace,
    op_norm_sq,
    order_of,
    q_commutator,
    scale,
)
from src.qcore.schemas import QContext
from src.qcore.service import bracket
from src.qpolys.service import laguerre_polynomial_coefficients
from src.verify.registry import CheckContext, check


def _random_element(c: CheckContext) -> FischerElement:
    degrees = c.rng.choice(5, size=int(c.rng.integers(1, 4)), replace=False)
    return element(c.ctx, {int(k): c.rng.normal(size=int(c.rng.integers(1, 6))).tolist() for k in degrees})


def _laguerre_element(ctx: QContext, k: int, j: int, beta: float) -> FischerElement:
    coeffs = laguerre_polynomial_coefficients(ctx, j, order_of(ctx, k), beta / ctx.mu)
    return element(ctx, {k: coeffs}, GaussTag(type="e_big", scale=beta))


@check("fischer.sl2_relations", tol=1e-12)
def sl2_relations(c: CheckContext) -> float:
    """[D/mu, x^2/mu]_{q^4} = E, [E, x^2/mu]_{q^2} = [2] x^2/mu and [D/mu, E]_{q^2} = [2] D/mu on 50 random elements."""
    mu = c.ctx.mu
    two = bracket(c.ctx.q**2, 2)

    def laplace(x: FischerElement) -> FischerElement:
        return scale(op_laplace(x), 1.0 / mu)

    def norm_sq(x: FischerElement) -> FischerElement:
        return scale(op_norm_sq(x), 1.0 / mu)

    worst = 0.0
    for _ in range(50):
        e = _random_element(c)
        worst = max(
            worst,
            coefficient_residual(q_commutator(laplace, norm_sq, 4, e), op_euler(e)),
            coefficient_residual(q_commutator(op_euler, norm_sq, 2, e), scale(norm_sq(e), two)),
            coefficient_residual(q_commutator(laplace, op_euler, 2, e), scale(laplace(e), two)),
        )
    return worst


@check("fischer.intertwining", tol=1e-8)
def intertwining(c: CheckContext) -> float:
    """F-bar h* = h F-bar on Laguerre blocks and F h = h* F on e-Gaussian monomial blocks, k, j <= 3."""
    worst = 0.0
    for k in range(4):
        for j in range(4):
            block = _laguerre_element(c.ctx, k, j, 0.8)
            lhs = fourier_forward(hamiltonian_exact(block, starred=True))
            rhs = hamiltonian_exact(fourier_forward(block))
            worst = max(worst, coefficient_residual(lhs, rhs))

            monomial = element(c.ctx, {k: [0.0] * j + [1.0]}, GaussTag(type="e_small", scale=1.4))
            lhs = fourier_inverse(hamiltonian_exact(monomial), gamma=c.gamma)
            rhs = hamiltonian_exact(fourier_inverse(monomial, gamma=c.gamma), starred=True)
            worst = max(worst, coefficient_residual(lhs, rhs))
    return worst


@check("fischer.fourier_inversion", tol=1e-8)
def fourier_inversion(c: CheckContext) -> float:
    """F^- F-bar^+ = id on Laguerre blocks, k, j <= 3."""
    worst = 0.0
    for k in range(4):
        for j in range(4):
            block = _laguerre_element(c.ctx, k, j, 1.3)
            restored = fourier_inverse(fourier_forward(block, sign=1), sign=-1, gamma=c.gamma)
            worst = max(worst, coefficient_residual(restored, block))
    return worst


@check("fischer.ground_state_transform", tol=1e-10)
def ground_state_transform(c: CheckContext) -> float:
    """F[e_{q^2}(-x^2/(q^{m/2} mu))] = q^{m^2/4} E_{q^2}(-q^{m/2+2} x^2/mu)."""
    q, m = c.ctx.q, c.ctx.m
    psi = element(c.ctx, {0: [1.0]}, GaussTag(type="e_small", scale=q ** (-m / 2 - 2)))
    expected = element(c.ctx, {0: [q ** (m * m / 4)]}, GaussTag(type="e_big", scale=q ** (m / 2 + 2)))
    return coefficient_residual(fourier_inverse(psi, gamma=c.gamma), expected)


@check("fischer.document_round_trip", tol=1e-15)
def document_round_trip(c: CheckContext) -> float:
    """A transformed element survives JSON serialization unchanged."""
    source = _laguerre_element(c.ctx, 2, 1, 1.1)
    image = fourier_forward(source, sign=-1)
    text = image.to_document().model_dump_json()
    restored = FischerElement.from_document(FischerDocument.model_validate_json(text), c.ctx.precision)
    phases_match = all(restored.block(k).phase == s.phase for k, s in image.blocks.items())
    return coefficient_residual(restored, image) if phases_match else 1.0
