"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Invalid input: bad index, malformed file, or a violated precondition."""
