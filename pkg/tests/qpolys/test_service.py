"""Unit tests for the q-orthogonal polynomials."""

import numpy as np
import pytest

from src.qcore.schemas import QContext
from src.qcore.service import bracket, factorial
from src.qpolys.schemas import PolyParams
from src.qpolys.service import (
    gegenbauer,
    gegenbauer_coeffs,
    hermite,
    laguerre_polynomial_coefficients,
    laguerre_q2,
    laguerre_q2inv,
    laguerre_sum,
    monomial_to_laguerre_inv,
)
from src.shared.errors import QDomainError


@pytest.mark.unit
class TestHermite:
    """Test suite for the q-Hermite polynomials."""

    def test_low_degrees(self, ctx: QContext) -> None:
        """Test H_0 = 1 and H_1 = (1+q) t."""
        assert hermite(ctx, 0, 0.7) == 1.0
        assert hermite(ctx, 1, 0.7) == pytest.approx(1.5 * 0.7)

    def test_degree_two_by_hand(self, ctx: QContext) -> None:
        """Test H_2(1) = ((1+q))^2 - [2]_q! q^2 = 1.875 at q = 0.5."""
        assert hermite(ctx, 2, 1.0) == pytest.approx(1.875)

    @pytest.mark.parametrize("k", range(7))
    def test_parity(self, ctx: QContext, k: int) -> None:
        """Test H_k(-t) = (-1)^k H_k(t)."""
        assert hermite(ctx, k, -0.4) == pytest.approx((-1) ** k * hermite(ctx, k, 0.4), rel=1e-14)

    def test_negative_degree_rejected(self, ctx: QContext) -> None:
        """Test that a negative degree is a domain error."""
        with pytest.raises(QDomainError, match="degree"):
            hermite(ctx, -1, 0.3)


@pytest.mark.unit
class TestLaguerre:
    """Test suite for the two q-Laguerre families."""

    @pytest.mark.parametrize("alpha", [-0.5, 0.0, 1.5])
    def test_degree_zero_is_one(self, ctx: QContext, alpha: float) -> None:
        """Test that both variants start at 1."""
        assert laguerre_q2(ctx, 0, alpha, 0.8) == pytest.approx(1.0)
        assert laguerre_q2inv(ctx, 0, alpha, 0.8) == pytest.approx(1.0)

    @pytest.mark.parametrize("alpha", [-0.5, 0.0, 1.5])
    def test_degree_one(self, ctx: QContext, alpha: float) -> None:
        """Test L_1(u | q^2) = q^2 [alpha+1]_{q^2} - u."""
        u = 0.6
        expected = 0.25 * bracket(0.25, alpha + 1.0) - u
        assert laguerre_q2(ctx, 1, alpha, u) == pytest.approx(expected, rel=1e-14)

    @pytest.mark.parametrize("j", range(6))
    @pytest.mark.parametrize("alpha", [-0.5, 0.3, 2.0])
    @pytest.mark.parametrize("u", [0.0, 0.35, 1.7])
    def test_inverse_variant_is_base_swap(self, ctx: QContext, j: int, alpha: float, u: float) -> None:
        """Test that the q^-2 family equals the generic sum with q replaced by 1/q."""
        direct = laguerre_q2inv(ctx, j, alpha, u)
        swapped = laguerre_sum(1.0 / ctx.q, j, alpha, u)
        assert direct == pytest.approx(swapped, rel=1e-11, abs=1e-12)

    def test_alpha_bound_enforced(self, ctx: QContext) -> None:
        """Test that alpha <= -1 is refused."""
        with pytest.raises(QDomainError, match="alpha"):
            laguerre_q2(ctx, 2, -1.0, 0.5)
        with pytest.raises(ValueError, match="alpha"):
            PolyParams(family="laguerre_q2", degree=2, parameter=-1.5)

    def test_power_coefficients_resum(self, ctx: QContext) -> None:
        """Test that the power coefficients reproduce the polynomial at a scaled argument."""
        coefficients = laguerre_polynomial_coefficients(ctx, 4, 0.5, scale=1.0 / ctx.mu)
        for u in (0.1, 0.9, 2.5):
            resummed = sum(c * u**i for i, c in enumerate(coefficients))
            assert resummed == pytest.approx(laguerre_q2(ctx, 4, 0.5, u / ctx.mu), rel=1e-12)

    @pytest.mark.parametrize("j", range(5))
    def test_monomial_expansion(self, ctx: QContext, j: int) -> None:
        """Test the expansion of t^{2j}/((1+q)^j [j]!) in the q^-2 Laguerre basis."""
        q, nu = ctx.q, 0.5
        coefficients = monomial_to_laguerre_inv(ctx, j, nu)
        for t in (0.3, 1.1):
            u = q * q * t * t / (1.0 + q)
            expanded = sum(b * laguerre_q2inv(ctx, i, nu, u) for i, b in enumerate(coefficients))
            expected = t ** (2 * j) / ((1.0 + q) ** j * factorial(q * q, j))
            assert expanded == pytest.approx(expected, rel=1e-10)


@pytest.mark.unit
class TestGegenbauer:
    """Test suite for the q-Gegenbauer polynomials."""

    def test_low_degrees(self, ctx: QContext) -> None:
        """Test C_0 = 1 and C_1 = [lambda]_{q^2} (1+q) t."""
        assert gegenbauer(ctx, 0, 0.5, 0.3) == pytest.approx(1.0)
        assert gegenbauer(ctx, 1, 0.5, 0.3) == pytest.approx(bracket(0.25, 0.5) * 1.5 * 0.3)

    @pytest.mark.parametrize("n", range(7))
    def test_parity(self, ctx: QContext, n: int) -> None:
        """Test C_n(-t) = (-1)^n C_n(t)."""
        assert gegenbauer(ctx, n, 1.5, -0.6) == pytest.approx((-1) ** n * gegenbauer(ctx, n, 1.5, 0.6), rel=1e-13)

    def test_coefficients_low_degree(self, ctx: QContext) -> None:
        """Test c^{0} = [1] and c^{1} = [[lambda]_{q^2} mu]."""
        assert gegenbauer_coeffs(ctx, 0, 0.5) == pytest.approx([1.0])
        assert gegenbauer_coeffs(ctx, 1, 0.5) == pytest.approx([bracket(0.25, 0.5) * ctx.mu])

    def test_coefficients_resum(self, ctx: QContext) -> None:
        """Test that the coefficients reproduce C_4 at the rescaled argument."""
        lam = 0.5
        coefficients = gegenbauer_coeffs(ctx, 4, lam)
        for t in np.linspace(-0.9, 0.9, 7):
            resummed = sum(c * t ** (4 - 2 * j) for j, c in enumerate(coefficients))
            expected = gegenbauer(ctx, 4, lam, ctx.mu * t / (1.0 + ctx.q))
            assert resummed == pytest.approx(expected, rel=1e-12, abs=1e-14)
