"""Tests for the q-orthogonal polynomials."""
