"""Harmonic-oscillator ground states, Laguerre eigenblocks and their Fourier eigenphases."""
