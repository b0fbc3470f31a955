"""Tests for the q-Hankel transforms and the braided-line pair."""
