"""Command-line surface: ``qh eval``, ``qh transform`` and ``qh verify``."""
