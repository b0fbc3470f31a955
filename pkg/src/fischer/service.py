"""Block-diagonal operators on Fischer elements.

On a block u^l S_k, with nu = k + m/2 - 1 and brackets in base q^2:

    x^2 : u^l -> u^{l+1}
    Laplacian : u^l -> mu^2 [l+nu][l] u^{l-1}
    E : u^l -> ([nu+1+l] + q^2 [l]) u^l
    Lambda^s : u^l -> q^{2s(k+2l)} u^l

The barred Laplacian uses base q^-2 and mu_bar = 1 + q^{m-2}; the starred one
is q^{-2m} times it. Polynomial rules act on the expanded view, where each
Gaussian is replaced by its power series up to a fixed order. The exact
Laplacians and Hamiltonians act on Gaussian-tagged blocks directly through the
q-Leibniz rule, staying inside P (x) e_{q^2} and P (x) E_{q^2}.
"""

import math
from collections.abc import Callable, Sequence

from src.fischer.schemas import PLAIN, FischerElement, GaussTag, RadialSeries
from src.qcore.schemas import QContext
from src.qcore.service import bracket, exp_big, exp_small, factorial
from src.shared.config import get_settings
from src.shared.errors import QDomainError
from src.shared.logging import get_logger


logger = get_logger(__name__)

Operator = Callable[[FischerElement], FischerElement]


def _min_valid(*values: int | None) -> int | None:
    finite = [v for v in values if v is not None]
    return min(finite) if finite else None


def order_of(ctx: QContext, k: int) -> float:
    """Radial order nu = k + m/2 - 1 of the degree-k block."""
    return k + ctx.m / 2 - 1


# ---------------------------------------------------------------------------
# Construction and linear structure
# ---------------------------------------------------------------------------


def element(ctx: QContext, blocks: dict[int, Sequence[float]], gauss: GaussTag = PLAIN) -> FischerElement:
    """Build an element whose blocks all share one Gaussian factor."""
    return FischerElement(ctx=ctx, blocks={k: RadialSeries(coeffs=tuple(c), gauss=gauss) for k, c in blocks.items()})


def _same_gauss(a: GaussTag, b: GaussTag) -> bool:
    return a.type == b.type and math.isclose(a.scale, b.scale, rel_tol=1e-14)


def _add_series(a: RadialSeries, b: RadialSeries) -> RadialSeries:
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if not _same_gauss(a.gauss, b.gauss):
        msg = f"cannot add blocks with Gaussians {a.gauss.type}({a.gauss.scale}) and {b.gauss.type}({b.gauss.scale})"
        raise QDomainError(msg)
    turn = (b.phase - a.phase) % 4
    if turn not in (0, 2):
        msg = f"cannot add real blocks whose phases differ by {turn} quarter turns"
        raise QDomainError(msg)
    sign = 1.0 if turn == 0 else -1.0
    size = max(len(a.coeffs), len(b.coeffs))
    coeffs = tuple(a.coefficient(i) + sign * b.coefficient(i) for i in range(size))
    return RadialSeries(coeffs=coeffs, gauss=a.gauss, phase=a.phase, valid_to=_min_valid(a.valid_to, b.valid_to))


def add(a: FischerElement, b: FischerElement) -> FischerElement:
    """Blockwise sum.

    Raises:
        QDomainError: If a shared degree carries different Gaussians or phases off by a quarter turn.
    """
    keys = set(a.blocks) | set(b.blocks)
    return a.with_blocks({k: _add_series(a.block(k), b.block(k)) for k in keys})


def _scale_series(s: RadialSeries, factor: float) -> RadialSeries:
    return s.model_copy(update={"coeffs": tuple(factor * c for c in s.coeffs)})


def scale(e: FischerElement, factor: float) -> FischerElement:
    """Multiply every block by a real factor."""
    if factor == 0.0:
        return e.with_blocks({})
    return e.with_blocks({k: _scale_series(s, factor) for k, s in e.blocks.items()})


def subtract(a: FischerElement, b: FischerElement) -> FischerElement:
    return add(a, scale(b, -1.0))


def q_commutator(a: Operator, b: Operator, power: float, e: FischerElement) -> FischerElement:
    """[A, B]_{q^power} e = A(B e) - q^power B(A e)."""
    return subtract(a(b(e)), scale(b(a(e)), e.ctx.q**power))


# ---------------------------------------------------------------------------
# Gaussian expansion
# ---------------------------------------------------------------------------


def gaussian_coefficients(ctx: QContext, gauss: GaussTag, order: int) -> list[float]:
    """Power-series coefficients of the Gaussian up to u^order."""
    if gauss.type == "none":
        return [1.0]
    q = ctx.q
    p = q * q
    if gauss.type == "e_small":
        c = -gauss.scale * p / ctx.mu
        return [c**n / factorial(p, n) for n in range(order + 1)]
    c = -gauss.scale / ctx.mu
    return [q ** (n * (n - 1)) * c**n / factorial(p, n) for n in range(order + 1)]


def expand_series(ctx: QContext, s: RadialSeries, order: int | None = None) -> RadialSeries:
    """Multiply out the Gaussian; coefficients up to ``order`` are exact."""
    if s.gauss.type == "none":
        return s
    order = get_settings().l_expand if order is None else order
    g = gaussian_coefficients(ctx, s.gauss, order)
    coeffs = [0.0] * (order + 1)
    for i, a in enumerate(s.coeffs[: order + 1]):
        for n in range(order + 1 - i):
            coeffs[i + n] += a * g[n]
    return RadialSeries(coeffs=tuple(coeffs), phase=s.phase, valid_to=_min_valid(order, s.valid_to))


def expand(e: FischerElement, order: int | None = None) -> FischerElement:
    """Fully expanded polynomial view of an element."""
    return e.with_blocks({k: expand_series(e.ctx, s, order) for k, s in e.blocks.items()})


def _map_blocks(e: FischerElement, rule: Callable[[int, RadialSeries], RadialSeries]) -> FischerElement:
    return e.with_blocks({k: rule(k, s) for k, s in e.blocks.items()})


def profile_at(ctx: QContext, s: RadialSeries, r: float) -> float:
    """Real radial profile sum_l a_l r^{2l} times the Gaussian at radius r; the phase is not applied."""
    u = r * r
    polynomial = sum(a * u**n for n, a in enumerate(s.coeffs))
    p = ctx.q * ctx.q
    if s.gauss.type == "e_small":
        return polynomial * exp_small(ctx, -s.gauss.scale * p * u / ctx.mu, base=p)
    if s.gauss.type == "e_big":
        return polynomial * exp_big(ctx, -s.gauss.scale * u / ctx.mu, base=p)
    return polynomial


# ---------------------------------------------------------------------------
# Polynomial rules
# ---------------------------------------------------------------------------


def op_norm_sq(e: FischerElement) -> FischerElement:
    """Multiply by x^2; Gaussian tags are untouched."""

    def rule(_: int, s: RadialSeries) -> RadialSeries:
        valid = None if s.valid_to is None else s.valid_to + 1
        return s.model_copy(update={"coeffs": (0.0, *s.coeffs), "valid_to": valid})

    return _map_blocks(e, rule)


def _laplace_constants(ctx: QContext, starred: bool) -> tuple[float, float]:
    """Return (base, factor) of the Laplacian or of the starred barred Laplacian."""
    q = ctx.q
    if not starred:
        return q * q, ctx.mu**2
    if ctx.frame != "quantum":
        msg = "the barred calculus is only defined in the quantum frame"
        raise QDomainError(msg)
    return 1.0 / (q * q), q ** (-2 * ctx.m) * ctx.mu_bar**2


def op_laplace(e: FischerElement, *, starred: bool = False, order: int | None = None) -> FischerElement:
    """Apply the Laplacian (or Delta* = q^{-2m} Delta-bar) to the expanded view."""
    ctx = e.ctx
    b, factor = _laplace_constants(ctx, starred)

    def rule(k: int, s: RadialSeries) -> RadialSeries:
        nu = order_of(ctx, k)
        coeffs = tuple(
            factor * bracket(b, n + nu) * bracket(b, n) * a for n, a in enumerate(s.coeffs) if n > 0
        )
        valid = None if s.valid_to is None else s.valid_to - 1
        return RadialSeries(coeffs=coeffs, phase=s.phase, valid_to=valid)

    return _map_blocks(expand(e, order), rule)


def op_euler(e: FischerElement, order: int | None = None) -> FischerElement:
    """Apply the Euler operator E on the expanded view."""
    ctx = e.ctx
    p = ctx.q**2

    def rule(k: int, s: RadialSeries) -> RadialSeries:
        nu = order_of(ctx, k)
        coeffs = tuple((bracket(p, nu + 1 + n) + p * bracket(p, n)) * a for n, a in enumerate(s.coeffs))
        return s.model_copy(update={"coeffs": coeffs})

    return _map_blocks(expand(e, order), rule)


def op_dilation(e: FischerElement, power: float) -> FischerElement:
    """Apply Lambda^power; Gaussian scales move with the dilation, so no expansion is needed."""
    q = e.ctx.q

    def rule(k: int, s: RadialSeries) -> RadialSeries:
        coeffs = tuple(q ** (2 * power * (k + 2 * n)) * a for n, a in enumerate(s.coeffs))
        gauss = s.gauss
        if gauss.type != "none":
            gauss = GaussTag(type=gauss.type, scale=gauss.scale * q ** (4 * power))
        return s.model_copy(update={"coeffs": coeffs, "gauss": gauss})

    return _map_blocks(e, rule)


def op_hamiltonian(e: FischerElement, *, starred: bool = False, order: int | None = None) -> FischerElement:
    """h = (-Delta + x^2)/2, or h* = (-Delta* + x^2)/2, on the expanded view."""
    expanded = expand(e, order)
    kinetic = op_laplace(expanded, starred=starred)
    return scale(subtract(op_norm_sq(expanded), kinetic), 0.5)


# ---------------------------------------------------------------------------
# Exact action on Gaussian-tagged blocks
# ---------------------------------------------------------------------------


def radial_laplacian(coeffs: Sequence[float], c: float, nu: float, b: float) -> list[float]:
    """Polynomial R with D(P e_b(cu)) = R e_b(cu), where D u^l = [l+nu]_b [l]_b u^{l-1}.

    D factors as N o d_b with N u^s = [s+nu+1]_b u^s, and d_b(P e_b(cu)) =
    (d_b P + c P(b u)) e_b(cu).
    """
    degree = len(coeffs) - 1
    if degree < 0:
        return []

    def p(i: int) -> float:
        return coeffs[i] if 0 <= i <= degree else 0.0

    g = [p(s + 1) * bracket(b, s + 1) + c * b**s * p(s) for s in range(degree + 1)]

    def g_at(i: int) -> float:
        return g[i] if 0 <= i <= degree else 0.0

    return [g_at(s) * bracket(b, s + nu + 1) + c * b ** (nu + s) * g_at(s - 1) for s in range(degree + 2)]


def gaussian_rate(ctx: QContext, gauss: GaussTag, starred: bool) -> float:
    """Return c with the Gaussian written as e_b(c u) in the base of the chosen calculus.

    Raises:
        QDomainError: If the Gaussian type does not belong to that calculus.
    """
    if gauss.type == "none":
        return 0.0
    if not starred and gauss.type == "e_small":
        return -gauss.scale * ctx.q**2 / ctx.mu
    if starred and gauss.type == "e_big":
        return -gauss.scale / ctx.mu
    operator = "h*" if starred else "h"
    msg = f"{operator} acts exactly only on {'e_big' if starred else 'e_small'} blocks, got {gauss.type}"
    raise QDomainError(msg)


def laplace_exact(e: FischerElement, *, starred: bool = False) -> FischerElement:
    """Apply the Laplacian (or Delta*) symbolically, keeping each block's Gaussian."""
    ctx = e.ctx
    b, factor = _laplace_constants(ctx, starred)

    def rule(k: int, s: RadialSeries) -> RadialSeries:
        c = gaussian_rate(ctx, s.gauss, starred)
        radial = radial_laplacian(s.coeffs, c, order_of(ctx, k), b)
        return s.model_copy(update={"coeffs": tuple(factor * r for r in radial)})

    return _map_blocks(e, rule)


def hamiltonian_exact(e: FischerElement, *, starred: bool = False) -> FischerElement:
    """h (or h*) applied symbolically to e_small (or e_big) tagged blocks."""
    return scale(subtract(op_norm_sq(e), laplace_exact(e, starred=starred)), 0.5)


# ---------------------------------------------------------------------------
# Comparison
# ---------------------------------------------------------------------------


def coefficient_residual(a: FischerElement, b: FischerElement) -> float:
    """Largest coefficient gap, relative to the largest coefficient, over the exact range of both.

    Blocks must carry matching Gaussians; phases are folded into the sign.

    Raises:
        QDomainError: If the Gaussians or phases are incompatible.
    """
    gap = subtract(a, b)
    largest = max((abs(c) for s in (*a.blocks.values(), *b.blocks.values()) for c in s.coeffs), default=0.0)
    worst = 0.0
    for s in gap.blocks.values():
        limit = len(s.coeffs) if s.valid_to is None else min(len(s.coeffs), s.valid_to + 1)
        worst = max(worst, max((abs(c) for c in s.coeffs[:limit]), default=0.0))
    return worst / largest if largest > 0.0 else worst
