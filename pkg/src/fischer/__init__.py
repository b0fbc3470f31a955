"""Fischer-block model of functions on quantum Euclidean space and their Fourier transforms."""
