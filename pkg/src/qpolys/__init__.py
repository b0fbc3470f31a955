"""q-Hermite, q-Laguerre and q-Gegenbauer polynomials evaluated from their finite sums."""
