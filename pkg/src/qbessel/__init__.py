"""First and second q-Bessel functions and their Laguerre generating identities."""
