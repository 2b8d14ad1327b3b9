"""Exception hierarchy shared across the package."""


class TQError(Exception):
    """Base class for every error raised by tqnet."""

    category = "computation"


class InvalidValueError(TQError, ValueError):
    """A value does not belong to the active semiring's domain."""


class UnsupportedClosureError(TQError):
    """Closure requested over a semiring where it is not supported."""


class UnsupportedOperationError(TQError):
    pass


class MalformedQuantityError(TQError, ValueError):
    """Triples are unsorted, overlapping or have empty intervals."""


class DimensionError(TQError, ValueError):
    pass


class InvalidInputError(TQError, ValueError):
    """An analysis precondition on the input network failed."""


class InputError(TQError):
    """Problems with documents read from disk."""

    category = "input"


class ParseError(InputError):
    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class ConsistencyError(InputError):
    """A link is active while one of its end nodes is not."""

    def __init__(self, violations):
        self.violations = violations
        parts = [
            f"link {u}->{v} outside node activity on {ivs}" for u, v, ivs in violations
        ]
        super().__init__("; ".join(parts))
