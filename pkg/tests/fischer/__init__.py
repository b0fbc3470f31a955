"""Tests for the Fischer-block operator algebra and the Bochner Fourier transforms."""
