"""Unit tests for the scalar q-calculus."""

import math
import warnings

import numpy as np
import pytest

from src.qcore.schemas import JacksonSpec, QContext, SeriesPolicy
from src.qcore.service import (
    exp_big,
    exp_big_complex,
    exp_small,
    exp_small_complex,
    jackson_infinite,
    q_bracket,
    q_derivative,
    q_gamma2,
    q_integrate_finite,
    q_integrate_infinite,
    q_pochhammer,
    reciprocal_gamma2,
    sum_series,
)
from src.shared.errors import DivergenceWarning, PoleError, QDomainError, TruncationError


@pytest.mark.unit
class TestQContext:
    """Test suite for the context model."""

    def test_mu_follows_dimension(self) -> None:
        """Test that mu = 1 + q^(2-m)."""
        assert QContext(q=0.5, m=3).mu == pytest.approx(3.0)
        assert QContext(q=0.5, m=2).mu == pytest.approx(2.0)
        assert QContext(q=0.5, m=1).mu == pytest.approx(1.5)

    def test_euclidean_frame_uses_one_plus_q(self) -> None:
        """Test that the undeformed frame normalizes with 1 + q."""
        assert QContext(q=0.5, m=3, frame="euclidean").mu == pytest.approx(1.5)

    @pytest.mark.parametrize("q", [0.0, 1.0, -0.2, 1.5])
    def test_rejects_q_outside_open_interval(self, q: float) -> None:
        """Test that boundary and out-of-range q values are refused."""
        with pytest.raises(ValueError, match="q"):
            QContext(q=q, m=3)

    def test_rejects_zero_dimension(self) -> None:
        """Test that m >= 1 is enforced."""
        with pytest.raises(ValueError, match="m"):
            QContext(q=0.5, m=0)

    def test_jackson_spec_bounds(self) -> None:
        """Test that the grid bounds must be ordered."""
        with pytest.raises(ValueError, match="k_lo"):
            JacksonSpec(gamma=1.0, k_lo=2, k_hi=1)

    @pytest.mark.parametrize(("k_lo", "k_hi"), [(-5, -1), (2, 4), (0, 0), (3, 3)])
    def test_jackson_spec_accepts_one_sided_windows(self, k_lo: int, k_hi: int) -> None:
        """Test that any window with k_lo <= k_hi is a valid grid."""
        spec = JacksonSpec(gamma=1.0, k_lo=k_lo, k_hi=k_hi)
        assert (spec.k_lo, spec.k_hi) == (k_lo, k_hi)


@pytest.mark.unit
class TestBracketsAndGamma:
    """Test suite for brackets, products and the q-Gamma function."""

    def test_bracket_values(self, ctx: QContext) -> None:
        """Test the elementary bracket values."""
        assert q_bracket(ctx, 0.0) == 0.0
        assert q_bracket(ctx, 1.0) == pytest.approx(1.0)
        assert q_bracket(ctx, 2.0) == pytest.approx(1.5)

    def test_pochhammer(self, ctx: QContext) -> None:
        """Test finite and degenerate q-Pochhammer symbols."""
        assert q_pochhammer(ctx, 0.0, 5) == 1.0
        assert q_pochhammer(ctx, 1.0, 3) == 0.0
        assert q_pochhammer(ctx, 0.5, 2) == pytest.approx(0.375)

    def test_infinite_pochhammer_limits_finite(self, ctx: QContext) -> None:
        """Test that the infinite product is the limit of long finite ones."""
        assert q_pochhammer(ctx, 0.3, None) == pytest.approx(q_pochhammer(ctx, 0.3, 80), rel=1e-14)

    def test_gamma_values(self, ctx: QContext) -> None:
        """Test Gamma_{q^2}(1) = 1 and Gamma_{q^2}(3) = 1 + q^2."""
        assert q_gamma2(ctx, 1.0) == pytest.approx(1.0, rel=1e-14)
        assert q_gamma2(ctx, 3.0) == pytest.approx(1.25, rel=1e-13)

    @pytest.mark.parametrize("t", [0.3, 1.5, 2.5, 4.2])
    def test_gamma_recurrence(self, ctx: QContext, t: float) -> None:
        """Test Gamma(t+1) = [t]_{q^2} Gamma(t)."""
        expected = q_bracket(ctx, t, base=0.25) * q_gamma2(ctx, t)
        assert q_gamma2(ctx, t + 1.0) == pytest.approx(expected, rel=1e-13)

    def test_gamma_rejects_nonpositive(self, ctx: QContext) -> None:
        """Test that nonpositive arguments raise a domain error."""
        with pytest.raises(QDomainError, match="t > 0"):
            q_gamma2(ctx, 0.0)

    def test_reciprocal_gamma_vanishes_at_poles(self, ctx: QContext) -> None:
        """Test 1/Gamma at nonpositive integers and its recurrence for negative t."""
        assert reciprocal_gamma2(ctx, -2.0) == 0.0
        t = -0.5
        expected = q_bracket(ctx, t, base=0.25) * reciprocal_gamma2(ctx, t + 1.0)
        assert reciprocal_gamma2(ctx, t) == pytest.approx(expected, rel=1e-13)


@pytest.mark.unit
class TestSeries:
    """Test suite for series termination."""

    def test_truncation_error_is_raised(self) -> None:
        """Test that a non-settling series reports the partial sum."""
        policy = SeriesPolicy(max_terms=10)
        with pytest.raises(TruncationError, match="10 terms") as info:
            sum_series((1.0 for _ in range(100)), policy)
        assert info.value.terms == 10
        assert info.value.partial_sum == pytest.approx(10.0)

    def test_geometric_series(self) -> None:
        """Test a geometric series sums to its closed form."""
        total = sum_series((0.5**k for k in range(500)), SeriesPolicy())
        assert total == pytest.approx(2.0, rel=1e-14)


@pytest.mark.unit
class TestDerivativeAndIntegrals:
    """Test suite for the q-derivative and Jackson integrals."""

    def test_derivative_of_constant(self, ctx: QContext) -> None:
        """Test the q-derivative of a constant vanishes."""
        assert q_derivative(ctx, lambda _t: 3.0, 0.7) == 0.0

    def test_derivative_of_square(self, ctx: QContext) -> None:
        """Test the q-derivative of t^2 at 1 equals [2]_q."""
        assert q_derivative(ctx, lambda t: t * t, 1.0) == pytest.approx(1.5)

    def test_derivative_at_zero_needs_series(self, ctx: QContext) -> None:
        """Test t=0 is refused without series data and accepted with it."""
        with pytest.raises(QDomainError, match="t=0"):
            q_derivative(ctx, math.sin, 0.0)
        assert q_derivative(ctx, math.sin, 0.0, at_zero=1.0) == 1.0

    def test_exponentials_are_derivative_eigenfunctions(self, ctx: QContext) -> None:
        """Test d_q e_q = e_q and d_q E_q(t) = E_q(qt)."""
        for t in np.linspace(-0.9, 0.9, 7):
            if t == 0.0:
                continue
            small = q_derivative(ctx, lambda s: exp_small(ctx, s), float(t))
            big = q_derivative(ctx, lambda s: exp_big(ctx, s), float(t))
            assert small == pytest.approx(exp_small(ctx, float(t)), rel=1e-12)
            assert big == pytest.approx(exp_big(ctx, 0.5 * float(t)), rel=1e-12)

    def test_leibniz_rule(self, ctx: QContext) -> None:
        """Test the q-Leibniz rule on random polynomials."""
        rng = np.random.default_rng(3)
        f = np.polynomial.Polynomial(rng.normal(size=5))
        g = np.polynomial.Polynomial(rng.normal(size=4))
        t = 0.8
        lhs = q_derivative(ctx, lambda s: float(f(s) * g(s)), t)
        rhs = q_derivative(ctx, lambda s: float(f(s)), t) * float(g(t)) + float(f(0.5 * t)) * q_derivative(
            ctx, lambda s: float(g(s)), t
        )
        assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_finite_integral_of_identity(self, ctx: QContext) -> None:
        """Test int_0^1 t d_q t = 1/(1+q)."""
        assert q_integrate_finite(ctx, lambda t: t, 1.0) == pytest.approx(2.0 / 3.0, rel=1e-13)

    def test_finite_integral_of_zero(self, ctx: QContext) -> None:
        """Test the integral of the zero function."""
        assert q_integrate_finite(ctx, lambda _t: 0.0, 1.0) == 0.0

    def test_fundamental_theorem(self, ctx: QContext) -> None:
        """Test int_0^a d_q g = g(a) - g(0) for random polynomials up to degree 8."""
        rng = np.random.default_rng(11)
        for degree in (1, 4, 8):
            g = np.polynomial.Polynomial(rng.normal(size=degree + 1))
            value = q_integrate_finite(ctx, lambda t, g=g: q_derivative(ctx, lambda s: float(g(s)), t), 1.3)
            assert value == pytest.approx(float(g(1.3) - g(0.0)), rel=1e-12, abs=1e-12)

    def test_nonpositive_upper_limit(self, ctx: QContext) -> None:
        """Test that the finite integral refuses a <= 0."""
        with pytest.raises(QDomainError, match="positive"):
            q_integrate_finite(ctx, lambda t: t, 0.0)

    def test_infinite_gaussian_matches_oracle(self, ctx: QContext) -> None:
        """Test the adaptive grid against a wide fixed grid."""

        def integrand(t: float) -> float:
            return t * exp_small(ctx, -0.25 * t * t / 1.5, base=0.25)

        adaptive = q_integrate_infinite(ctx, integrand, JacksonSpec(gamma=1.0))
        oracle = q_integrate_infinite(ctx, integrand, JacksonSpec(gamma=1.0, k_lo=-60, k_hi=120))
        assert adaptive == pytest.approx(oracle, rel=1e-12)

    def test_infinite_integral_is_q_constant(self, ctx: QContext) -> None:
        """Test invariance under gamma -> q gamma."""

        def integrand(t: float) -> float:
            return t * exp_small(ctx, -0.25 * t * t / 1.5, base=0.25)

        first = q_integrate_infinite(ctx, integrand, JacksonSpec(gamma=0.8))
        second = q_integrate_infinite(ctx, integrand, JacksonSpec(gamma=0.4))
        assert first == pytest.approx(second, rel=1e-12)

    def test_infinite_integral_of_zero(self, ctx: QContext) -> None:
        """Test the zero function integrates to zero and counts as decayed."""
        result = jackson_infinite(ctx, lambda _t: 0.0, JacksonSpec(gamma=1.0))
        assert result.value == 0.0
        assert result.decayed

    def test_finite_reduction_on_zero_grid(self, ctx: QContext) -> None:
        """Test that on the zero grid of E the infinite integral equals the finite one."""
        rng = np.random.default_rng(5)
        poly = np.polynomial.Polynomial(rng.normal(size=5))
        edge = 1.0 / math.sqrt(1.0 - ctx.q)

        def integrand(t: float) -> float:
            return float(poly(t)) * exp_big(ctx, -t * t / (1.0 + ctx.q), base=0.25)

        infinite = jackson_infinite(ctx, integrand, JacksonSpec(gamma=edge))
        finite = q_integrate_finite(ctx, integrand, edge)
        assert infinite.decayed
        assert infinite.value == pytest.approx(finite, rel=1e-12, abs=1e-13)

    def test_divergence_is_detected(self, ctx: QContext) -> None:
        """Test that a growing E-Gaussian on a generic grid raises a warning."""
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            result = jackson_infinite(ctx, lambda t: t * exp_big(ctx, -t * t, base=0.25), JacksonSpec(gamma=1.0))
        assert not result.decayed
        assert any(issubclass(w.category, DivergenceWarning) for w in caught)

    def test_coarse_window_sums_only_its_shells(self, ctx: QContext) -> None:
        """Test a window [-5, -1]: shells at t = 2, 4 contribute 2 + 4, the rest vanish."""
        result = jackson_infinite(ctx, lambda t: 1.0 if t < 5.0 else 0.0, JacksonSpec(gamma=1.0, k_lo=-5, k_hi=-1))
        assert result.value == pytest.approx(0.5 * 6.0, rel=1e-15)
        assert (result.k_lo, result.k_hi) == (-5, -1)
        assert result.decayed

    def test_fine_window_sums_only_its_shells(self, ctx: QContext) -> None:
        """Test a window [2, 4]: only the shell at t = 1/4 contributes."""
        result = jackson_infinite(ctx, lambda t: 1.0 if t > 0.2 else 0.0, JacksonSpec(gamma=1.0, k_lo=2, k_hi=4))
        assert result.value == pytest.approx(0.5 * 0.25, rel=1e-15)
        assert (result.k_lo, result.k_hi) == (2, 4)
        assert result.decayed


@pytest.mark.unit
class TestExponentials:
    """Test suite for the q-exponentials."""

    def test_values_at_zero(self, ctx: QContext) -> None:
        """Test e_q(0) = E_q(0) = 1."""
        assert exp_small(ctx, 0.0) == 1.0
        assert exp_big(ctx, 0.0) == 1.0

    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_zeros_of_big_exponential(self, ctx: QContext, k: int) -> None:
        """Test E_q(-q^-k/(1-q)) = 0."""
        assert abs(exp_big(ctx, -(ctx.q**-k) / (1.0 - ctx.q))) < 1e-12

    def test_inverse_pair(self, ctx: QContext) -> None:
        """Test e_q(t) E_q(-t) = 1 on twenty points, inside and outside the disc."""
        for t in np.linspace(-3.5, 1.9, 20):
            assert exp_small(ctx, float(t)) * exp_big(ctx, -float(t)) == pytest.approx(1.0, rel=1e-12)

    def test_series_and_product_agree(self, ctx: QContext) -> None:
        """Test both evaluations of E_q."""
        for t in (-4.0, -0.3, 0.7, 5.0):
            assert exp_big(ctx, t, method="series") == pytest.approx(exp_big(ctx, t, method="product"), rel=1e-12)

    def test_pole_raises(self, ctx: QContext) -> None:
        """Test e_q at q^-1/(1-q) is a pole."""
        with pytest.raises(PoleError, match="pole"):
            exp_small(ctx, (ctx.q**-1) / (1.0 - ctx.q))

    def test_complex_exponentials_are_inverse(self, ctx: QContext) -> None:
        """Test e_q(z) E_q(-z) = 1 for purely imaginary z."""
        for z in (0.7j, -2.5j, 6.0j):
            value = exp_small_complex(ctx, z) * exp_big_complex(ctx, -z)
            assert abs(value - 1.0) < 1e-12
