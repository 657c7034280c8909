"""Exception hierarchy shared by all scatterkit modules."""


class ScatterkitError(Exception):
    """Base class for errors raised on bad input or exceeded bounds."""


class ParseError(ScatterkitError):
    """Syntax error in an ordinal expression, space file or graph file."""

    def __init__(self, message, position=None, line=None):
        self.position = position
        self.line = line
        where = ""
        if line is not None:
            where = f" (line {line})"
        elif position is not None:
            where = f" (at position {position})"
        super().__init__(message + where)


class DomainError(ScatterkitError):
    """Input is well formed but outside the operation's domain."""


class ValidationError(DomainError):
    """A finite space or graph violates one of its structural axioms."""


class UnknownPointError(DomainError):
    """A point or vertex name does not belong to the structure."""


class OutOfSpaceError(DomainError):
    """A point lies at or beyond the bound of the ordinal space."""


class BoundExceededError(DomainError):
    """A brute-force enumeration would exceed its configured size bound."""


class UnrepresentableProfileError(DomainError):
    """The rank-level profile has infinitely many levels and cannot be listed."""


class InternalCheckError(RuntimeError):
    """Two redundant computations disagreed; signals a bug, not bad input."""
