"""Unit tests for the q-Bessel functions."""

import numpy as np
import pytest

from src.qbessel.schemas import BesselOrder
from src.qbessel.service import (
    bessel_coefficients,
    besselJ1,
    besselJ1_scaled,
    besselJ2_scaled,
    exp_imaginary_from_bessel,
    generating_sum,
)
from src.qcore.schemas import QContext
from src.qcore.service import bracket, exp_small_complex, factorial, q_derivative, q_gamma2
from src.shared.errors import QDomainError


@pytest.mark.unit
class TestOrigin:
    """Test suite for values at x = 0."""

    @pytest.mark.parametrize("nu", [-0.5, 0.0, 1.0, 2.5])
    def test_first_kind(self, ctx: QContext, nu: float) -> None:
        """Test x^-nu J^(1) at 0 = 1/((1+q)^nu Gamma(nu+1))."""
        expected = 1.0 / ((1.0 + ctx.q) ** nu * q_gamma2(ctx, nu + 1.0))
        assert besselJ1_scaled(ctx, nu, 0.0) == pytest.approx(expected, rel=1e-14)

    @pytest.mark.parametrize("nu", [-0.5, 0.0, 1.0, 2.5])
    def test_second_kind(self, ctx: QContext, nu: float) -> None:
        """Test x^-nu J^(2) at 0 = q^{nu^2}/((1+q)^nu Gamma(nu+1))."""
        expected = ctx.q ** (nu * nu) / ((1.0 + ctx.q) ** nu * q_gamma2(ctx, nu + 1.0))
        assert besselJ2_scaled(ctx, nu, 0.0) == pytest.approx(expected, rel=1e-14)

    def test_unscaled_singular_at_origin(self, ctx: QContext) -> None:
        """Test that negative orders cannot be evaluated unscaled at 0."""
        with pytest.raises(QDomainError, match="singular"):
            besselJ1(ctx, -0.5, 0.0)

    def test_transform_readiness(self) -> None:
        """Test the order admissibility flag."""
        assert BesselOrder(nu=-0.5).transform_ready
        assert not BesselOrder(nu=-0.7).transform_ready


@pytest.mark.unit
class TestSeries:
    """Test suite for series evaluation and branch selection."""

    def test_second_kind_against_brute_force(self, ctx: QContext) -> None:
        """Test J^(2) at nu = 0.5, x = 2 against a 200-term direct sum."""
        q, nu, x = ctx.q, 0.5, 2.0
        y = (x / (1.0 + q)) ** 2
        brute = sum(
            (-1) ** i * q ** (2 * i * (i + nu)) * y**i / (factorial(q * q, i) * q_gamma2(ctx, i + nu + 1.0))
            for i in range(60)
        )
        brute *= q ** (nu * nu) / (1.0 + q) ** nu
        assert besselJ2_scaled(ctx, nu, x) == pytest.approx(brute, rel=1e-13)

    def test_second_kind_changes_sign(self, ctx: QContext) -> None:
        """Test that the order-zero second Bessel function has a zero below 4/(1-q)."""
        values = [besselJ2_scaled(ctx, 0.0, x) for x in np.linspace(0.0, 4.0 / (1.0 - ctx.q), 200)]
        assert any(a * b < 0 for a, b in zip(values, values[1:], strict=False))

    def test_branches_agree_in_overlap(self, ctx: QContext) -> None:
        """Test the series and continuation branches at x = 0.9/(1-q), nu = 1."""
        x = 0.9 / (1.0 - ctx.q)
        series = besselJ1_scaled(ctx, 1.0, x, branch="series")
        continued = besselJ1_scaled(ctx, 1.0, x, branch="continuation")
        assert series == pytest.approx(continued, rel=1e-10)

    def test_forced_series_outside_radius(self, ctx: QContext) -> None:
        """Test that the direct series is refused beyond 1/(1-q)."""
        with pytest.raises(QDomainError, match="diverges"):
            besselJ1_scaled(ctx, 0.0, 2.5, branch="series")

    def test_large_argument_is_finite(self, ctx: QContext) -> None:
        """Test that evaluation far outside the disc returns finite values."""
        assert np.isfinite(besselJ1_scaled(ctx, 0.5, 40.0))
        assert np.isfinite(besselJ2_scaled(ctx, 0.5, 40.0))

    def test_negative_integer_order_has_leading_zeros(self, ctx: QContext) -> None:
        """Test that c_0 vanishes for nu = -1."""
        coefficients = bessel_coefficients(ctx, -1.0, 1)
        assert coefficients[0] == 0.0
        assert coefficients[1] != 0.0

    @pytest.mark.parametrize("u", [0.2, 0.5])
    def test_exponential_decomposition(self, ctx: QContext, u: float) -> None:
        """Test e_q(iu) from the half-order Bessel functions."""
        assert exp_imaginary_from_bessel(ctx, u) == pytest.approx(exp_small_complex(ctx, 1j * u), rel=1e-10)


@pytest.mark.unit
class TestDifferenceRelations:
    """Test suite for the q-difference relations between neighbouring orders."""

    @pytest.mark.parametrize("nu", [-0.5, 0.0, 0.5, 1.5])
    @pytest.mark.parametrize("u", [0.3, 0.8, 1.5])
    def test_lowering_derivative_first_kind(self, ctx: QContext, nu: float, u: float) -> None:
        """Test d^q [u^-nu J_nu] = -u u^-(nu+1) J_{nu+1}."""
        lhs = q_derivative(ctx, lambda s: besselJ1_scaled(ctx, nu, s), u)
        rhs = -u * besselJ1_scaled(ctx, nu + 1.0, u)
        assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-13)

    @pytest.mark.parametrize("nu", [-0.5, 0.0, 0.5, 1.5])
    def test_lowering_derivative_second_kind(self, ctx: QContext, nu: float) -> None:
        """Test the q^-1 derivative of J^(2)(qu)/u^nu."""
        q, u = ctx.q, 0.7

        def f(s: float) -> float:
            return q**nu * besselJ2_scaled(ctx, nu, q * s)

        lhs = q_derivative(ctx, f, u, base=1.0 / q)
        rhs = -q * u * q ** (nu + 1.0) * besselJ2_scaled(ctx, nu + 1.0, q * u)
        assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-13)

    @pytest.mark.parametrize("nu", [-0.5, 0.0, 0.5, 1.5])
    def test_three_term_relation(self, ctx: QContext, nu: float) -> None:
        """Test u^{1-nu}(J_{nu+1} + J_{nu-1})(u) = [2 nu]_q (qu)^-nu J_nu(qu)."""
        q, u = ctx.q, 0.9
        lhs = u * u * besselJ1_scaled(ctx, nu + 1.0, u) + besselJ1_scaled(ctx, nu - 1.0, u)
        rhs = bracket(q, 2 * nu) * besselJ1_scaled(ctx, nu, q * u)
        assert lhs == pytest.approx(rhs, rel=1e-11, abs=1e-13)

    @pytest.mark.parametrize("nu", [-0.5, 0.0, 0.5, 1.5])
    @pytest.mark.parametrize("u", [0.3, 0.8, 1.5])
    def test_three_term_relation_second_kind(self, ctx: QContext, nu: float, u: float) -> None:
        """Test u^{1-nu}(J_{nu+1} + J_{nu-1})(qu) = [2 nu]_q (qu)^-nu J_nu(u) for the second kind."""
        q = ctx.q
        lhs = q ** (nu + 1.0) * u * u * besselJ2_scaled(ctx, nu + 1.0, q * u) + q ** (nu - 1.0) * besselJ2_scaled(
            ctx, nu - 1.0, q * u
        )
        rhs = bracket(q, 2 * nu) * q**-nu * besselJ2_scaled(ctx, nu, u)
        assert lhs == pytest.approx(rhs, rel=1e-11, abs=1e-13)

    def test_second_kind_three_term_at_order_zero_cancels(self, ctx: QContext) -> None:
        """Test that [0]_q = 0 makes the two neighbouring orders cancel."""
        q, u = ctx.q, 0.7
        upper = q * u * u * besselJ2_scaled(ctx, 1.0, q * u)
        lower = besselJ2_scaled(ctx, -1.0, q * u) / q
        assert upper != 0.0
        assert upper + lower == pytest.approx(0.0, abs=1e-12 * abs(upper))

    @pytest.mark.parametrize("nu", [-0.5, 0.0, 0.5, 1.5])
    def test_raising_derivative(self, ctx: QContext, nu: float) -> None:
        """Test d^q [J_nu(u) u^nu] = J_{nu-1}(u) u^nu."""
        u = 0.6
        lhs = q_derivative(ctx, lambda s: s ** (2 * nu) * besselJ1_scaled(ctx, nu, s), u)
        rhs = u ** (2 * nu - 1) * besselJ1_scaled(ctx, nu - 1.0, u)
        assert lhs == pytest.approx(rhs, rel=1e-10)

    @pytest.mark.parametrize("nu", [-0.5, 0.0, 0.5, 1.5])
    def test_raising_derivative_second_kind(self, ctx: QContext, nu: float) -> None:
        """Test d^q [J^(2)_nu(u) u^nu] = q^nu J^(2)_{nu-1}(qu) u^nu."""
        q, u = ctx.q, 0.6
        lhs = q_derivative(ctx, lambda s: s ** (2 * nu) * besselJ2_scaled(ctx, nu, s), u)
        rhs = q ** (2 * nu - 1) * u ** (2 * nu - 1) * besselJ2_scaled(ctx, nu - 1.0, q * u)
        assert lhs == pytest.approx(rhs, rel=1e-10)

    @pytest.mark.parametrize("nu", [-0.5, 0.0, 0.5, 1.5])
    def test_mixed_derivative_second_kind(self, ctx: QContext, nu: float) -> None:
        """Test d^q [u^{nu+1} J^(2)_{nu-1}(u)] = [2nu]_q u^nu J^(2)_{nu-1}(u) - q^{nu+1} u^{nu+1} J^(2)_nu(qu)."""
        q, u = ctx.q, 0.6
        lhs = q_derivative(ctx, lambda s: s ** (2 * nu) * besselJ2_scaled(ctx, nu - 1.0, s), u)
        first = bracket(q, 2 * nu) * u ** (2 * nu - 1) * besselJ2_scaled(ctx, nu - 1.0, u)
        second = q ** (2 * nu + 1) * u ** (2 * nu + 1) * besselJ2_scaled(ctx, nu, q * u)
        assert lhs == pytest.approx(first - second, abs=1e-10 * max(abs(first), abs(second)))


@pytest.mark.unit
class TestGeneratingSums:
    """Test suite for the Laguerre generating identities."""

    @pytest.mark.parametrize("kind", [1, 2])
    @pytest.mark.parametrize("alpha", [0.0, 0.5])
    def test_truncation_bounded_by_first_omitted_term(self, ctx: QContext, kind: int, alpha: float) -> None:
        """Test that the partial sum matches the Bessel side up to the omitted tail."""
        result = generating_sum(ctx, kind, alpha, 0.5, 0.6, 14)  # type: ignore[arg-type]
        assert abs(result.bessel_side - result.partial_sum) <= 10 * result.first_omitted + 1e-13

    def test_more_terms_shrink_the_gap(self, ctx: QContext) -> None:
        """Test that the gap decreases with the number of retained terms."""
        short = generating_sum(ctx, 1, 0.5, 0.8, 0.9, 3)
        long = generating_sum(ctx, 1, 0.5, 0.8, 0.9, 12)
        assert abs(long.bessel_side - long.partial_sum) < abs(short.bessel_side - short.partial_sum)
