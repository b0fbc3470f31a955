"""Unit tests for radial series and Fischer elements."""

import pytest

from src.fischer.schemas import FischerDocument, FischerElement, GaussTag, RadialSeries
from src.qcore.schemas import QContext


@pytest.mark.unit
class TestRadialSeries:
    """Test suite for the radial series model."""

    def test_trailing_zeros_trimmed(self) -> None:
        """Test that (1, 2, 0, 0) is stored as (1, 2)."""
        assert RadialSeries(coeffs=(1.0, 2.0, 0.0, 0.0)).coeffs == (1.0, 2.0)

    def test_all_zero_is_empty(self) -> None:
        """Test that a zero series has no coefficients."""
        series = RadialSeries(coeffs=(0.0, 0.0))
        assert series.is_zero
        assert series.degree == -1

    def test_phase_reduced_mod_four(self) -> None:
        """Test that phases are quarter turns modulo 4."""
        assert RadialSeries(coeffs=(1.0,), phase=-1).phase == 3
        assert RadialSeries(coeffs=(1.0,), phase=6).unit == -1

    def test_plain_tag_ignores_scale(self) -> None:
        """Test that a Gaussian-free tag normalizes its scale."""
        assert GaussTag(type="none", scale=3.0).scale == 1.0

    def test_scale_must_be_positive(self) -> None:
        """Test Gaussian scale validation."""
        with pytest.raises(ValueError, match="scale"):
            GaussTag(type="e_small", scale=0.0)


@pytest.mark.unit
class TestFischerElement:
    """Test suite for the sparse block map."""

    def test_empty_blocks_dropped(self, ctx: QContext) -> None:
        """Test that zero series are never stored."""
        e = FischerElement(ctx=ctx, blocks={0: RadialSeries(coeffs=(1.0,)), 2: RadialSeries()})
        assert list(e.blocks) == [0]

    def test_keys_sorted(self, ctx: QContext) -> None:
        """Test that blocks are ordered by harmonic degree."""
        e = FischerElement(ctx=ctx, blocks={3: RadialSeries(coeffs=(1.0,)), 1: RadialSeries(coeffs=(2.0,))})
        assert list(e.blocks) == [1, 3]

    def test_negative_degree_rejected(self, ctx: QContext) -> None:
        """Test that harmonic degrees are nonnegative."""
        with pytest.raises(ValueError, match="harmonic degree"):
            FischerElement(ctx=ctx, blocks={-1: RadialSeries(coeffs=(1.0,))})

    def test_missing_block_is_zero(self, ctx: QContext) -> None:
        """Test that an absent degree reads as the zero series."""
        assert FischerElement(ctx=ctx).block(4).is_zero


@pytest.mark.unit
class TestDocument:
    """Test suite for the JSON document form."""

    def test_round_trip(self, ctx: QContext) -> None:
        """Test that an element survives serialization to JSON and back."""
        e = FischerElement(
            ctx=ctx,
            blocks={
                0: RadialSeries(coeffs=(1.0, -0.25), gauss=GaussTag(type="e_small", scale=2.0)),
                3: RadialSeries(coeffs=(0.5,), gauss=GaussTag(type="e_small", scale=2.0), phase=3),
            },
        )
        text = e.to_document().model_dump_json()
        restored = FischerElement.from_document(FischerDocument.model_validate_json(text), ctx.precision)
        assert restored == e

    def test_field_names(self, ctx: QContext) -> None:
        """Test the fixed document layout."""
        e = FischerElement(ctx=ctx, blocks={1: RadialSeries(coeffs=(2.0,))})
        document = e.to_document().model_dump()
        assert document == {
            "m": 3,
            "q": 0.5,
            "blocks": [{"k": 1, "gauss": {"type": "none", "scale": 1.0}, "coeffs": [2.0], "phase": 0}],
        }

    def test_duplicate_degree_rejected(self) -> None:
        """Test that a degree listed twice is refused."""
        document = FischerDocument.model_validate(
            {"m": 3, "q": 0.5, "blocks": [{"k": 1, "coeffs": [1.0]}, {"k": 1, "coeffs": [2.0]}]}
        )
        with pytest.raises(ValueError, match="duplicate"):
            FischerElement.from_document(document)

    def test_invalid_context_rejected(self) -> None:
        """Test that q outside (0, 1) fails while rebuilding."""
        document = FischerDocument(m=3, q=1.0, blocks=[])
        with pytest.raises(ValueError, match="q"):
            FischerElement.from_document(document)
