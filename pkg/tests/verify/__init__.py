"""Tests for the verification registry and runner."""
