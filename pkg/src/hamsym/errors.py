"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A bound or search parameter lies outside its domain."""


class ResourceLimitError(RuntimeError):
    """A configured size cap would be exceeded."""


class FamilyFormatError(ValueError):
    """Malformed family file; carries the offending line number."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
