"""Fourier transforms on Fischer elements through the Bochner relations.

The degree-k block S_k(x) psi(x^2) transforms into (+-i)^k S_k(y) times a
q-Hankel transform of psi at order nu = m/2 + k - 1. The forward transform
F-bar maps P (x) E_{q^2}(-beta u/mu) onto P (x) e_{q^2}(-q^2 u/(beta mu)) through
the first transform; the inverse F maps P (x) e_{q^2}(-alpha q^2 u/mu) onto
P (x) E_{q^2}(-u/(alpha mu)) through the second transform, normalized by
d(gamma sqrt(alpha/mu), m/2 - 1).
"""

import math
import time
from typing import Literal

import numpy as np

from src.fischer.schemas import FischerElement, GaussTag, RadialSeries
from src.fischer.service import order_of, profile_at
from src.qcore.schemas import JacksonSpec, QContext
from src.qhankel.schemas import HankelSpec, LaguerreBlock, MonomialGaussian, RadialFunction
from src.qhankel.service import d_const, hankel1, hankel1_at, hankel2, hankel2_at
from src.qpolys.service import laguerre_polynomial_coefficients
from src.shared.config import get_settings
from src.shared.errors import QDomainError
from src.shared.logging import get_logger


logger = get_logger(__name__)

Sign = Literal[1, -1]


def _check_sign(sign: int) -> None:
    if sign not in (1, -1):
        msg = f"sign must be +1 or -1, got {sign}"
        raise QDomainError(msg)


def _require(k: int, s: RadialSeries, gauss_type: str, transform: str) -> None:
    if s.gauss.type != gauss_type:
        msg = f"{transform} needs {gauss_type} blocks, block k={k} carries {s.gauss.type}"
        raise QDomainError(msg)
    if s.valid_to is not None:
        msg = f"{transform} needs exact blocks, block k={k} is a truncated expansion"
        raise QDomainError(msg)


def laguerre_basis_coefficients(ctx: QContext, coeffs: tuple[float, ...], nu: float, scale: float) -> list[float]:
    """Coefficients b_j with sum_l a_l u^l = sum_j b_j L_j^(nu)(scale u | q^2)."""
    degree = len(coeffs) - 1
    if degree < 0:
        return []
    basis = np.zeros((degree + 1, degree + 1))
    for j in range(degree + 1):
        basis[: j + 1, j] = laguerre_polynomial_coefficients(ctx, j, nu, scale)
    return [float(b) for b in np.linalg.solve(basis, np.asarray(coeffs, dtype=float))]


def _forward_block(ctx: QContext, k: int, s: RadialSeries) -> RadialSeries:
    nu = order_of(ctx, k)
    beta = s.gauss.scale
    spec = HankelSpec(nu=nu, scale=beta)
    weights = laguerre_basis_coefficients(ctx, s.coeffs, nu, beta / ctx.mu)
    coeffs = [0.0] * len(weights)
    for j, b in enumerate(weights):
        image = hankel1(ctx, spec, RadialFunction.from_form(ctx, LaguerreBlock(j=j, order=nu, beta=beta, coef=b)))
        form = image.known_form
        if not isinstance(form, MonomialGaussian):
            msg = f"no closed-form image for the Laguerre block j={j} at nu={nu}"
            raise QDomainError(msg)
        coeffs[j] = form.coef
    return RadialSeries(coeffs=tuple(coeffs), gauss=GaussTag(type="e_small", scale=1.0 / beta), phase=s.phase)


def _inverse_block(ctx: QContext, k: int, s: RadialSeries, gamma: float) -> RadialSeries:
    nu = order_of(ctx, k)
    alpha = s.gauss.scale
    spec = HankelSpec(nu=nu, scale=gamma)
    normalization = d_const(ctx, gamma * math.sqrt(alpha / ctx.mu), ctx.m / 2 - 1)
    coeffs = np.zeros(len(s.coeffs))
    for j, p in enumerate(s.coeffs):
        if p == 0.0:
            continue
        image = hankel2(ctx, spec, RadialFunction.from_form(ctx, MonomialGaussian(j=j, alpha=alpha, coef=p)))
        form = image.known_form
        if not isinstance(form, LaguerreBlock):
            msg = f"no closed-form image for the monomial Gaussian j={j} at nu={nu}"
            raise QDomainError(msg)
        powers = laguerre_polynomial_coefficients(ctx, j, nu, form.beta / ctx.mu)
        coeffs[: j + 1] += form.coef / normalization * np.asarray(powers)
    return RadialSeries(
        coeffs=tuple(float(c) for c in coeffs), gauss=GaussTag(type="e_big", scale=1.0 / alpha), phase=s.phase
    )


def fourier_forward(e: FischerElement, sign: Sign = 1) -> FischerElement:
    """F-bar^{+-}: blocks in P (x) E_{q^2}(-beta u/mu) to P (x) e_{q^2}(-q^2 u/(beta mu)).

    Raises:
        QDomainError: If a block is not an exact e_big block, or the sign is not +-1.
    """
    _check_sign(sign)
    start_time = time.perf_counter()
    blocks: dict[int, RadialSeries] = {}
    for k, s in e.blocks.items():
        _require(k, s, "e_big", "fourier_forward")
        image = _forward_block(e.ctx, k, s)
        blocks[k] = image.model_copy(update={"phase": (image.phase + sign * k) % 4})
    logger.debug(
        "fourier_forward_completed",
        sign=sign,
        blocks=len(blocks),
        duration_ms=(time.perf_counter() - start_time) * 1000,
    )
    return e.with_blocks(blocks)


def fourier_inverse(e: FischerElement, sign: Sign = 1, gamma: float | None = None) -> FischerElement:
    """F^{+-}: blocks in P (x) e_{q^2}(-alpha q^2 u/mu) to P (x) E_{q^2}(-u/(alpha mu)).

    The image is assembled from the closed forms of the second transform.
    ``gamma`` anchors its infinite grid and enters only through the ratio of
    d(gamma sqrt(alpha/mu), .) factors, which leaves the image unchanged.
    ``quadrature_block`` integrates the same image on that grid.

    Raises:
        QDomainError: If a block is not an exact e_small block, or the sign is not +-1.
    """
    _check_sign(sign)
    gamma = get_settings().gamma if gamma is None else gamma
    start_time = time.perf_counter()
    blocks: dict[int, RadialSeries] = {}
    for k, s in e.blocks.items():
        _require(k, s, "e_small", "fourier_inverse")
        image = _inverse_block(e.ctx, k, s, gamma)
        blocks[k] = image.model_copy(update={"phase": (image.phase + sign * k) % 4})
    logger.debug(
        "fourier_inverse_completed",
        sign=sign,
        gamma=gamma,
        blocks=len(blocks),
        duration_ms=(time.perf_counter() - start_time) * 1000,
    )
    return e.with_blocks(blocks)


def quadrature_block(
    ctx: QContext, k: int, s: RadialSeries, r: float, *, direction: Literal["forward", "inverse"], gamma: float = 1.0
) -> float:
    """Evaluate one transformed block profile at r by direct Jackson quadrature.

    The forward direction integrates the first transform over the support of
    the E-Gaussian; the inverse integrates the second on the grid anchored at
    gamma and divides by the same normalization as ``fourier_inverse``.
    """
    nu = order_of(ctx, k)
    if direction == "forward":
        _require(k, s, "e_big", "quadrature_block")
        return hankel1_at(ctx, nu, s.gauss.scale, lambda t: profile_at(ctx, s, t), r)
    _require(k, s, "e_small", "quadrature_block")
    normalization = d_const(ctx, gamma * math.sqrt(s.gauss.scale / ctx.mu), ctx.m / 2 - 1)
    value = hankel2_at(ctx, nu, JacksonSpec(gamma=gamma), lambda t: profile_at(ctx, s, t), r)
    return value / normalization
