"""Exception types shared across the package."""


class LsbError(Exception):
    """Base class for library errors."""


class FieldError(LsbError, ValueError):
    """Unsupported or malformed field."""


class DimensionMismatch(LsbError, ValueError):
    pass


class UnsupportedMethod(LsbError):
    """The requested computation needs a finite field (or is over the size cap)."""


class NotNilpotent(LsbError):
    pass


class InvalidParams(LsbError, ValueError):
    pass


class ParseError(LsbError, ValueError):
    """Malformed ``.lsa`` input; ``kind`` names the failure class."""

    def __init__(self, message: str, line: int = 0, column: int = 0, kind: str = "syntax"):
        self.line = line
        self.column = column
        self.kind = kind
        loc = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{loc}{kind}: {message}")


class SearchCapExceeded(LsbError):
    pass
