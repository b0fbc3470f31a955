"""Tests for the oscillator eigenstructure."""
