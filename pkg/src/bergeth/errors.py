"""Exception types shared across the package."""


class BergethError(Exception):
    """Base class for library-specific errors."""


class Graph6Error(BergethError, ValueError):
    """Malformed or unsupported graph6 input.

    ``offset`` is the byte offset of the offending character, when known.
    """

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"byte {offset}: {message}"
        super().__init__(message)
        self.offset = offset


class HypergraphFormatError(BergethError, ValueError):
    """Malformed hypergraph text input; ``line`` is 1-based."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ContractError(BergethError, ValueError):
    """An operation was called outside its stated preconditions."""


class GuardError(BergethError):
    """Input exceeds the hard size guard of an exhaustive search.

    The guards exist because these searches grow at least exponentially;
    pass the explicit override to run them anyway.
    """
