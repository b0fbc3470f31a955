"""Eigenstructure of the oscillators h = (-Delta + x^2)/2 and h* = (-Delta* + x^2)/2.

Both Hamiltonians have the eigenvalues (mu/2)[n + m/2]_{q^2} q^{-(n + m/2)}.
The eigenblock of index (k, j) is S_k P_j(x^2) times the Gaussian of
``OscBlock.gauss``; P_j is monic of degree j and is solved from the radial
eigen-equation on the exact Gaussian-tagged action.
"""

import math
import time

import numpy as np

from src.fischer.fourier import Sign, fourier_forward, fourier_inverse
from src.fischer.schemas import FischerElement, GaussTag, RadialSeries
from src.fischer.service import element, hamiltonian_exact
from src.oscillator.schemas import FourierEigencheck, OscBlock
from src.qcore.schemas import QContext
from src.qcore.service import bracket
from src.shared.errors import QDomainError
from src.shared.logging import get_logger


logger = get_logger(__name__)


def eigenvalue(ctx: QContext, n: int) -> float:
    """(mu/2)[n + m/2]_{q^2} q^{-(n + m/2)}."""
    if n < 0:
        msg = f"eigenvalue index must be >= 0, got {n}"
        raise QDomainError(msg)
    a = n + ctx.m / 2
    return ctx.mu / 2 * bracket(ctx.q**2, a) * ctx.q ** (-a)


def energy_level(ctx: QContext, energy: float) -> float:
    """arcsinh((1 - q^2) E/mu)/ln(1/q) - m/2, which returns n on the n-th eigenvalue."""
    return math.asinh((1.0 - ctx.q**2) * energy / ctx.mu) / math.log(1.0 / ctx.q) - ctx.m / 2


def ground_state(ctx: QContext, *, barred: bool = False) -> FischerElement:
    """psi_0 = e_{q^2}(-x^2/(q^{m/2} mu)) or psi-bar_0 = E_{q^2}(-q^{m/2+2} x^2/mu)."""
    return element(ctx, {0: [1.0]}, OscBlock(k=0, j=0, barred=barred).gauss(ctx))


def _hamiltonian_matrix(ctx: QContext, k: int, gauss: GaussTag, starred: bool, size: int) -> np.ndarray:
    """Column i holds the coefficients of the Hamiltonian applied to u^i S_k times the Gaussian."""
    matrix = np.zeros((size + 1, size))
    for i in range(size):
        unit = [0.0] * i + [1.0]
        image = hamiltonian_exact(element(ctx, {k: unit}, gauss), starred=starred).block(k)
        matrix[: len(image.coeffs), i] = image.coeffs
    return matrix


def eigen_block(ctx: QContext, k: int, j: int, *, barred: bool = False) -> FischerElement:
    """Monic Laguerre eigenblock of h (or h* when barred) with index n = k + 2j.

    Rows 1..j of (h - lambda_n) P = 0 determine the lower coefficients of P
    from p_j = 1; row 0 and the top row hold by the choice of lambda_n and of
    the Gaussian scale.

    Raises:
        QDomainError: If k or j is negative, or a barred block is asked for outside the quantum frame.
    """
    if k < 0 or j < 0:
        msg = f"eigenblock indices must be >= 0, got k={k}, j={j}"
        raise QDomainError(msg)
    block = OscBlock(k=k, j=j, barred=barred)
    gauss = block.gauss(ctx)
    if j == 0:
        return element(ctx, {k: [1.0]}, gauss)
    start_time = time.perf_counter()
    shifted = _hamiltonian_matrix(ctx, k, gauss, barred, j + 1) - eigenvalue(ctx, block.n) * np.eye(j + 2, j + 1)
    lower = np.linalg.solve(shifted[1 : j + 1, :j], -shifted[1 : j + 1, j])
    logger.debug(
        "eigen_block_solved",
        k=k,
        j=j,
        barred=barred,
        duration_ms=(time.perf_counter() - start_time) * 1000,
    )
    return element(ctx, {k: [*map(float, lower), 1.0]}, gauss)


def fourier_eigencheck(ctx: QContext, k: int, j: int, sign: Sign = 1, gamma: float | None = None) -> FourierEigencheck:
    """Compare q^{-m^2/4} F^{+-} of the unbarred block (k, j) with (+-i)^{k+2j} times the barred one."""
    source = eigen_block(ctx, k, j)
    target = eigen_block(ctx, k, j, barred=True).block(k)
    image = fourier_inverse(source, sign, gamma).block(k)
    a = np.asarray(image.coeffs)
    b = np.asarray(target.coeffs)
    if a.shape != b.shape:
        width = max(a.size, b.size)
        a = np.pad(a, (0, width - a.size))
        b = np.pad(b, (0, width - b.size))
    scalar = float(a @ b / (b @ b))
    residual = float(np.max(np.abs(a - scalar * b)) / np.max(np.abs(a)))
    phase = (image.phase + (2 if scalar < 0 else 0)) % 4
    return FourierEigencheck(
        k=k,
        j=j,
        sign=sign,
        phase=phase,
        expected_phase=(sign * (k + 2 * j)) % 4,
        ratio=abs(scalar) * ctx.q ** (-(ctx.m**2) / 4),
        residual=residual,
    )


def fourier_round_trip(ctx: QContext, k: int, j: int, sign: Sign = 1) -> RadialSeries:
    """F^{-+} o F^{+-} on the unbarred eigenblock, which returns the block itself."""
    opposite: Sign = -1 if sign == 1 else 1
    image = fourier_inverse(eigen_block(ctx, k, j), sign)
    return fourier_forward(image, opposite).block(k)
