class AlgebraError(Exception):
    """Base class for every error raised by the algebra modules."""


class UsageError(AlgebraError, ValueError):
    """Arguments that do not fit together (arity mismatch, bad flags)."""


class ParseError(UsageError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class DomainError(AlgebraError, ValueError):
    """Mathematically undefined request: zero polynomial, singular matrix, cls(1)..."""


class CappedResultError(AlgebraError):
    """A resource guard fired. `partial` holds whatever was computed so far."""

    def __init__(self, message: str, cap: int, partial=None):
        super().__init__(message)
        self.cap = cap
        self.partial = partial


class InconclusiveError(AlgebraError):
    """Randomized trials kept disagreeing after every retry."""


class TransformationError(AlgebraError):
    def __init__(self, message: str, obstruction=None, retries: int = 0):
        super().__init__(message)
        self.obstruction = obstruction
        self.retries = retries
