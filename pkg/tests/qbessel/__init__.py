"""Tests for the q-Bessel functions."""
