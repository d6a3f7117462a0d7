"""Shared error type for domain-level failures."""


class CharvarError(ValueError):
    """Raised when an input is outside the mathematical domain of an operation."""
