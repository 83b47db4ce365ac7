"""Shared exception types."""


class NoFixedPointError(ValueError):
    """The seed letter's image does not start with the seed."""


class ScanCapExceededError(RuntimeError):
    """A letter scan hit its cap before finding enough occurrences."""


class InsufficientTermsError(RuntimeError):
    """A partition check could not be decided from the terms supplied."""


class BoardGrowthError(RuntimeError):
    """The solver hit its board growth cap before finding enough P-positions."""
