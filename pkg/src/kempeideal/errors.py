"""Exception hierarchy; the CLI maps each class to its own exit code."""


class KempeError(Exception):
    exit_code = 1


class DomainError(KempeError, ValueError):
    """Invalid input: bad vertex, non-stable class, mismatched colorings, malformed JSON."""

    exit_code = 1


class ResourceLimitError(KempeError, RuntimeError):
    """A configured size cap (fiber nodes, oracle scale) was exceeded."""

    exit_code = 2


class InconsistencyError(KempeError, RuntimeError):
    """An internal invariant failed, e.g. a chain search contradicting ideal membership."""

    exit_code = 3
