"""One module of registered checks per suite."""
