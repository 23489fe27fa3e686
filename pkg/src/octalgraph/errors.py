"""Exception types shared across the package."""


class OctalGraphError(Exception):
    """Base class for all errors raised by octalgraph."""


class InvalidArgumentError(OctalGraphError, ValueError):
    pass


class ParseError(OctalGraphError, ValueError):
    """Malformed octal code or graph DSL string.

    ``token`` holds the offending character or fragment so callers can
    point at it.
    """

    def __init__(self, message, token=None):
        super().__init__(message)
        self.token = token


class ResourceLimitError(OctalGraphError, RuntimeError):
    """Raised when an evaluation would exceed the configured position cap."""

    def __init__(self, cap):
        super().__init__(f"position cache exceeded the cap of {cap} entries")
        self.cap = cap
