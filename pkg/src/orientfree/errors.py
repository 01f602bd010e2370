"""Exception types shared across the package."""


class OrientFreeError(Exception):
    """Base class for all errors raised by orientfree."""


class InvalidArgumentError(OrientFreeError, ValueError):
    """An argument violates an operation's precondition."""


class MalformedOrientationError(InvalidArgumentError):
    """An orientation's bit vector does not fit its host graph."""


class ParseError(OrientFreeError, ValueError):
    """Syntax or semantic error in the graph text format."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class ResourceLimitError(OrientFreeError):
    """A configured size cap would be exceeded."""

    def __init__(self, cap: str, limit: int, requested: int):
        self.cap = cap
        self.limit = limit
        self.requested = requested
        super().__init__(f"{cap} cap exceeded: requested {requested}, limit {limit}")
