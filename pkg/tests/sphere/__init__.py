"""Tests for sphere and space integration."""
