"""Exception types raised by the library."""


class DeodharError(Exception):
    """Base class for all library errors."""


class ConfigurationError(DeodharError, ValueError):
    """Unsupported family/rank or malformed user input."""


class PreconditionError(DeodharError, ValueError):
    """An operation was called on input violating its stated hypotheses."""


class UnsupportedError(DeodharError, ValueError):
    """The requested combination of inputs has no defined answer here."""
