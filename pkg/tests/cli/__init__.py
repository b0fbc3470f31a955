"""Tests for the qh command line."""
