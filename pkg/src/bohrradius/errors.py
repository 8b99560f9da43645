"""Exception hierarchy shared by every module of the package."""


class BohrError(Exception):
    """Base class for all errors raised by bohrradius."""


class DomainError(BohrError, ValueError):
    """An argument lies outside the range where the quantity is defined."""


class ConvergenceError(BohrError, RuntimeError):
    """A series or iteration exhausted its budget before meeting its tolerance."""


class BracketError(BohrError, ValueError):
    """The function does not change sign on the requested bracket."""


class NoRootError(BracketError):
    """A sign scan found no root on the search interval."""


class LambdaSyntaxError(BohrError, ValueError):
    """Malformed weight-function source text.

    ``position`` is the 0-based character offset of the offending token.
    """

    def __init__(self, message, position, source=""):
        self.message = message
        self.position = position
        self.source = source
        super().__init__(f"{message} (at position {position})")

    def caret(self):
        """Two-line rendering of the source with a caret under the error."""
        return f"{self.source}\n{' ' * self.position}^"


class LambdaEvalError(BohrError, ArithmeticError):
    """Evaluation of a weight function failed at a particular r."""

    def __init__(self, message, r):
        self.r = r
        super().__init__(f"{message} at r={r!r}")
