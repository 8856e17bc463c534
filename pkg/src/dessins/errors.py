"""Exception hierarchy shared by every subpackage.

Each class carries a short stable ``code`` used by the command line front end
when rendering one-line error messages.
"""


class DessinsError(Exception):
    code = "error"


class DomainError(DessinsError, ValueError):
    """Input lies outside the domain of an operation."""

    code = "domain"


class PreconditionError(DessinsError, ValueError):
    code = "precondition"


class DegenerateInputError(DomainError):
    code = "degenerate"


class PoleError(DomainError):
    code = "pole"


class ResourceError(DessinsError, RuntimeError):
    code = "resource"


class ParseError(DessinsError, ValueError):
    """Malformed textual input; ``column`` is 1-based."""

    code = "parse"

    def __init__(self, message, column=None, text=None):
        self.message = message
        self.column = column
        self.text = text
        if column is not None:
            message = f"{message} (column {column})"
        super().__init__(message)
