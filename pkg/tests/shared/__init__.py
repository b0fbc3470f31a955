"""Tests for shared modules (config, logging)."""
