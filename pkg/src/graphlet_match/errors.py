class GraphletMatchError(Exception):
    """Base class for every error raised by this package."""


class ParseError(GraphletMatchError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphValidationError(GraphletMatchError):
    pass


class UnknownVertexError(GraphletMatchError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class CapacityError(GraphletMatchError):
    """Raised when an exhaustive procedure would exceed its configured size cap."""


class InvalidOrderingError(GraphletMatchError):
    pass


class InvalidQueryError(GraphletMatchError):
    pass
