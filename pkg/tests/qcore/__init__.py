"""Tests for the scalar q-calculus."""
