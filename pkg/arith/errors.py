"""Exceptions raised by the exact-arithmetic kernel."""


class UsageError(ValueError):
    """Operands are incompatible or an operation was called outside its contract."""


class DomainError(ValueError):
    """An exact computation left its domain (division by zero, bad exponent, pole)."""


class ParseError(UsageError):
    """Text input could not be read as a polynomial over the declared variables."""

    def __init__(self, message: str, line: int = 1, column: int = 1) -> None:
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
