"""Exception types shared across the package."""


class DecycleError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(DecycleError, ValueError):
    """Malformed input text. Carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DomainError(DecycleError, ValueError):
    """Input graph is outside the supported domain."""


class NotEvenError(DomainError):
    """Some vertex has odd degree; only even graphs are handled."""


class DisconnectedError(DomainError):
    """Operation requires a connected graph."""


class InvalidDecompositionError(DecycleError, ValueError):
    """A cycle decomposition does not match the graph it claims to cover."""


class OracleLimitError(DomainError):
    """Exhaustive search refused because the instance exceeds the size limit."""


class InvariantError(DecycleError, RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
