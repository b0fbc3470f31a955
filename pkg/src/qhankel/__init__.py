"""q-Hankel transform pair, its inversion constant and the braided-line Fourier pair."""
