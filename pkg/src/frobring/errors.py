"""Exception types shared across the package."""


class FrobringError(Exception):
    """Base class for all package errors."""


class CapExceeded(FrobringError):
    """A search or construction would exceed a configured size cap."""


class NotARing(FrobringError):
    """Structure constants or tables do not define a unital associative ring."""


class ReduciblePolynomial(FrobringError):
    """The supplied field polynomial is not irreducible over F_p."""


class NotASubgroup(FrobringError):
    """The supplied element set is not closed under the group operation."""


class NotPrimitive(FrobringError):
    """The supplied idempotent is not primitive."""


class NotInWedderburnForm(FrobringError):
    """The ring was not built as a product of matrix rings over fields."""


class InternalInconsistency(FrobringError):
    """Two provably-equivalent computations disagreed; indicates a bug."""


class ParseError(FrobringError):
    """Ring description text could not be parsed."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
