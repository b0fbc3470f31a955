"""Quantum-sphere integration, Gaussian-induced space integrals and Funk-Hecke coefficients."""
