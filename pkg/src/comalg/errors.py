class DomainError(ValueError):
    """Input outside the domain of an operation."""


class NotGenericError(DomainError):
    """The fundamental cubic has vanishing discriminant."""


class UnsupportedError(Exception):
    """A case the library deliberately does not handle."""


class ConsistencyError(AssertionError):
    """Two independent computation routes disagree."""
