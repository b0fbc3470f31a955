"""Checks of the oscillator spectrum and its Fourier eigenstructure."""

from src.fischer.service import coefficient_residual, hamiltonian_exact, scale
from src.oscillator.service import eigen_block, eigenvalue, energy_level, fourier_eigencheck, fourier_round_trip
from src.verify.registry import CheckContext, check


SPLITS = [(k, j) for k in range(9) for j in range(5) if k + 2 * j <= 8]


@check("oscillator.eigenvalues", tol=1e-10)
def eigenvalues(c: CheckContext) -> float:
    """h and h* act on the blocks (k, j), k + 2j <= 8, as lambda_{k+2j}."""
    worst = 0.0
    for k, j in SPLITS:
        level = eigenvalue(c.ctx, k + 2 * j)
        for barred in (False, True):
            block = eigen_block(c.ctx, k, j, barred=barred)
            image = hamiltonian_exact(block, starred=barred)
            worst = max(worst, coefficient_residual(image, scale(block, level)))
    return worst


@check("oscillator.energy_exponent", tol=1e-10)
def energy_exponent(c: CheckContext) -> float:
    """The arcsinh form returns n on the n-th level."""
    return max(abs(energy_level(c.ctx, eigenvalue(c.ctx, n)) - n) for n in range(9))


@check("oscillator.fourier_eigenphase", tol=1e-8)
def fourier_eigenphase(c: CheckContext) -> float:
    """F^{+-} maps each block to (+-i)^{k+2j} times its barred partner, k + 2j <= 6."""
    worst = 0.0
    for k, j in SPLITS:
        if k + 2 * j > 6:
            continue
        for sign in (1, -1):
            result = fourier_eigencheck(c.ctx, k, j, sign, c.gamma)  # type: ignore[arg-type]
            if not result.phase_ok:
                return 1.0
            worst = max(worst, result.residual)
    return worst


@check("oscillator.ground_state_ratio", tol=1e-10)
def ground_state_ratio(c: CheckContext) -> float:
    """F psi_0 = q^{m^2/4} psi-bar_0."""
    return abs(fourier_eigencheck(c.ctx, 0, 0, 1, c.gamma).ratio - 1.0)


@check("oscillator.round_trip", tol=1e-8)
def round_trip(c: CheckContext) -> float:
    """F-bar^{-+} F^{+-} = id on the blocks with k + 2j <= 4."""
    worst = 0.0
    for k, j in SPLITS:
        if k + 2 * j > 4:
            continue
        block = eigen_block(c.ctx, k, j)
        for sign in (1, -1):
            restored = block.with_blocks({k: fourier_round_trip(c.ctx, k, j, sign)})  # type: ignore[arg-type]
            worst = max(worst, coefficient_residual(restored, block))
    return worst
