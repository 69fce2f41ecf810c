"""Exception hierarchy shared by the whole library."""


class EntroineqError(Exception):
    """Base class for all errors raised by this library."""


class DimensionError(EntroineqError):
    """A vector or table has an incompatible length or shape."""


class DomainError(EntroineqError):
    """Arguments lie outside an operation's mathematical domain."""


class ConvergenceError(EntroineqError):
    """A series or iteration failed to converge within its budget."""


class PoleError(EntroineqError):
    """Evaluation requested at a pole of the underlying function."""


class UnsupportedBranchError(EntroineqError):
    """The requested branch of a function is not defined."""


class NormalizationError(EntroineqError):
    """A truncated distribution does not carry enough probability mass."""
