"""Scalar q-calculus: brackets, q-Gamma, q-products, q-exponentials and Jackson integration."""
