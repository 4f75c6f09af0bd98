"""Exception and warning types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class ValidationError(ValueError):
    """A value object was constructed from inconsistent data."""


class DatasetError(ValidationError):
    """A frequency dataset file could not be parsed."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class ConservationWarning(UserWarning):
    """Internal dependency sums differ between the two compared layouts."""
