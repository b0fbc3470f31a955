"""Registry and runner of the identity checks behind ``qh verify``."""
