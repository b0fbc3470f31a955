"""Unit tests for the block-diagonal operators."""

import numpy as np
import pytest

from src.fischer.schemas import FischerElement, GaussTag
from src.fischer.service import (
    add,
    coefficient_residual,
    element,
    expand,
    hamiltonian_exact,
    laplace_exact,
    op_dilation,
    op_euler,
    op_hamiltonian,
    op_laplace,
    op_norm_sq,
    q_commutator,
    scale,
)
from src.qcore.schemas import QContext
from src.qcore.service import bracket
from src.shared.errors import QDomainError


def random_element(ctx: QContext, rng: np.random.Generator) -> FischerElement:
    """Plain element with degrees k, l <= 4 and normal coefficients."""
    degrees = rng.choice(5, size=int(rng.integers(1, 4)), replace=False)
    return element(ctx, {int(k): rng.normal(size=int(rng.integers(1, 6))).tolist() for k in degrees})


@pytest.mark.unit
class TestLinearStructure:
    """Test suite for blockwise addition and scaling."""

    def test_add_merges_degrees(self, ctx: QContext) -> None:
        """Test that disjoint degrees are kept and shared ones added."""
        total = add(element(ctx, {0: [1.0], 2: [1.0, 1.0]}), element(ctx, {2: [0.0, -1.0], 3: [4.0]}))
        assert total.block(2).coeffs == (1.0,)
        assert list(total.blocks) == [0, 2, 3]

    def test_cancellation_drops_block(self, ctx: QContext) -> None:
        """Test that e - e is the zero element."""
        e = element(ctx, {1: [1.0, 2.0]})
        assert add(e, scale(e, -1.0)).is_zero

    def test_mismatched_gaussians_rejected(self, ctx: QContext) -> None:
        """Test that blocks in different Gaussian spaces cannot be added."""
        a = element(ctx, {0: [1.0]}, GaussTag(type="e_small", scale=1.0))
        b = element(ctx, {0: [1.0]}, GaussTag(type="e_big", scale=1.0))
        with pytest.raises(QDomainError, match="Gaussians"):
            add(a, b)

    def test_quarter_turn_phases_rejected(self, ctx: QContext) -> None:
        """Test that real and imaginary blocks do not combine."""
        a = element(ctx, {1: [1.0]})
        b = a.with_blocks({1: a.block(1).model_copy(update={"phase": 1})})
        with pytest.raises(QDomainError, match="quarter"):
            add(a, b)

    def test_opposite_phases_subtract(self, ctx: QContext) -> None:
        """Test that i^2 = -1 is folded into the sum."""
        a = element(ctx, {1: [1.0, 1.0]})
        b = a.with_blocks({1: a.block(1).model_copy(update={"phase": 2})})
        assert add(a, b).is_zero


@pytest.mark.unit
class TestMonomialRules:
    """Test suite for the action of x^2, the Laplacian, E and Lambda on blocks."""

    def test_norm_sq_shifts(self, ctx: QContext) -> None:
        """Test that x^2 applied twice multiplies by u^2."""
        e = element(ctx, {0: [1.0, 2.0]})
        assert op_norm_sq(op_norm_sq(e)).block(0).coeffs == (0.0, 0.0, 1.0, 2.0)

    def test_laplace_of_norm_sq(self, ctx: QContext) -> None:
        """Test Delta(u) = mu^2 [m/2]_{q^2} on the k = 0 block."""
        image = op_laplace(element(ctx, {0: [0.0, 1.0]}))
        expected = ctx.mu**2 * bracket(ctx.q**2, ctx.m / 2)
        assert image.block(0).coeffs == pytest.approx((expected,))

    @pytest.mark.parametrize("k", range(4))
    def test_harmonics_are_null_solutions(self, ctx: QContext, k: int) -> None:
        """Test that constants in every block are annihilated."""
        assert op_laplace(element(ctx, {k: [1.0]})).is_zero

    def test_laplace_monomial_rule(self, ctx: QContext) -> None:
        """Test Delta(u^2 S_1) = mu^2 [2 + 1 + m/2 - 1][2] u S_1."""
        p = ctx.q**2
        image = op_laplace(element(ctx, {1: [0.0, 0.0, 1.0]}))
        expected = ctx.mu**2 * bracket(p, 2 + ctx.m / 2) * bracket(p, 2)
        assert image.block(1).coeffs == pytest.approx((0.0, expected))

    @pytest.mark.parametrize("k", range(4))
    def test_euler_on_harmonics(self, ctx: QContext, k: int) -> None:
        """Test E S_k = [m/2 + k]_{q^2} S_k."""
        image = op_euler(element(ctx, {k: [1.0]}))
        assert image.block(k).coeffs == pytest.approx((bracket(ctx.q**2, ctx.m / 2 + k),))

    def test_euler_on_norm_sq(self, ctx: QContext) -> None:
        """Test E u = ([m/2 + 1] + q^2) u."""
        p = ctx.q**2
        image = op_euler(element(ctx, {0: [0.0, 1.0]}))
        assert image.block(0).coefficient(1) == pytest.approx(bracket(p, ctx.m / 2 + 1) + p)

    def test_dilation_of_degree_three(self, ctx: QContext) -> None:
        """Test that Lambda multiplies u S_1 by q^6."""
        image = op_dilation(element(ctx, {1: [0.0, 1.0]}), 1.0)
        assert image.block(1).coefficient(1) == pytest.approx(ctx.q**6)

    def test_dilation_exponents_add(self, ctx: QContext) -> None:
        """Test Lambda^{1/2} Lambda^{1/2} = Lambda, Gaussian scales included."""
        e = element(ctx, {2: [1.0, -0.5, 0.25]}, GaussTag(type="e_small", scale=1.5))
        twice = op_dilation(op_dilation(e, 0.5), 0.5)
        once = op_dilation(e, 1.0)
        assert coefficient_residual(twice, once) < 1e-14
        assert twice.block(2).gauss.scale == pytest.approx(1.5 * ctx.q**4)

    def test_dilation_fixes_constants(self, ctx: QContext) -> None:
        """Test Lambda^s(1) = 1."""
        assert op_dilation(element(ctx, {0: [1.0]}), 2.7).block(0).coeffs == (1.0,)


@pytest.mark.unit
class TestQuantumAlgebra:
    """Test suite for the U_q(sl2) relations between Delta/mu, x^2/mu and E."""

    def test_forced_case(self, ctx: QContext) -> None:
        """Test (Delta/mu)(x^2/mu)(1) = [m/2]_{q^2} = E(1)."""
        one = element(ctx, {0: [1.0]})
        lhs = scale(op_laplace(op_norm_sq(one)), 1.0 / ctx.mu**2)
        assert coefficient_residual(lhs, op_euler(one)) < 1e-14

    @pytest.mark.parametrize("seed", range(10))
    def test_relations_on_random_elements(self, ctx: QContext, seed: int) -> None:
        """Test the three q-commutator relations coefficientwise."""
        mu = ctx.mu
        two = bracket(ctx.q**2, 2)
        e = random_element(ctx, np.random.default_rng(seed))

        def laplace(x: FischerElement) -> FischerElement:
            return scale(op_laplace(x), 1.0 / mu)

        def norm_sq(x: FischerElement) -> FischerElement:
            return scale(op_norm_sq(x), 1.0 / mu)

        assert coefficient_residual(q_commutator(laplace, norm_sq, 4, e), op_euler(e)) < 1e-12
        assert coefficient_residual(q_commutator(op_euler, norm_sq, 2, e), scale(norm_sq(e), two)) < 1e-12
        assert coefficient_residual(q_commutator(laplace, op_euler, 2, e), scale(laplace(e), two)) < 1e-12


@pytest.mark.unit
class TestHamiltonians:
    """Test suite for h and h* on truncated expansions and on Gaussian blocks."""

    def test_hamiltonian_of_constant(self, ctx: QContext) -> None:
        """Test h(1) = x^2/2."""
        assert op_hamiltonian(element(ctx, {0: [1.0]})).block(0).coeffs == (0.0, 0.5)

    def test_ground_state_eigenvalue(self, ctx: QContext) -> None:
        """Test that e_{q^2}(-x^2/(q^{m/2} mu)) has eigenvalue (mu/2)[m/2] q^{-m/2} under h."""
        q, m = ctx.q, ctx.m
        psi = element(ctx, {0: [1.0]}, GaussTag(type="e_small", scale=q ** (-m / 2 - 2)))
        eigenvalue = ctx.mu / 2 * bracket(q * q, m / 2) * q ** (-m / 2)
        residual = coefficient_residual(op_hamiltonian(psi, order=40), scale(expand(psi, 40), eigenvalue))
        assert residual < 1e-12

    def test_barred_ground_state_eigenvalue(self, ctx: QContext) -> None:
        """Test that E_{q^2}(-q^{m/2+2} x^2/mu) has the same eigenvalue under h*."""
        q, m = ctx.q, ctx.m
        psi = element(ctx, {0: [1.0]}, GaussTag(type="e_big", scale=q ** (m / 2 + 2)))
        eigenvalue = ctx.mu / 2 * bracket(q * q, m / 2) * q ** (-m / 2)
        residual = coefficient_residual(
            op_hamiltonian(psi, starred=True, order=30), scale(expand(psi, 30), eigenvalue)
        )
        assert residual < 1e-12

    @pytest.mark.parametrize("starred", [False, True])
    def test_exact_laplacian_matches_expansion(self, ctx: QContext, starred: bool) -> None:
        """Test the q-Leibniz Laplacian against the monomial rule on the expanded view."""
        gauss = GaussTag(type="e_big" if starred else "e_small", scale=1.3)
        e = element(ctx, {0: [1.0, 0.5], 2: [-0.3, 0.0, 0.2]}, gauss)
        exact = expand(laplace_exact(e, starred=starred), 25)
        truncated = op_laplace(e, starred=starred, order=25)
        assert coefficient_residual(exact, truncated) < 1e-12

    def test_exact_hamiltonian_keeps_gaussian(self, ctx: QContext) -> None:
        """Test that h stays inside P (x) e_{q^2}."""
        gauss = GaussTag(type="e_small", scale=0.8)
        image = hamiltonian_exact(element(ctx, {1: [1.0, 2.0]}, gauss))
        assert image.block(1).gauss == gauss
        assert image.block(1).degree == 2

    def test_exact_hamiltonian_needs_matching_gaussian(self, ctx: QContext) -> None:
        """Test that h refuses E-Gaussian blocks."""
        e = element(ctx, {0: [1.0]}, GaussTag(type="e_big", scale=1.0))
        with pytest.raises(QDomainError, match="e_small"):
            hamiltonian_exact(e)

    def test_barred_calculus_needs_quantum_frame(self) -> None:
        """Test that h* is refused in the undeformed frame."""
        flat = QContext(q=0.5, m=3, frame="euclidean")
        with pytest.raises(QDomainError, match="quantum"):
            op_laplace(element(flat, {0: [1.0]}), starred=True)
