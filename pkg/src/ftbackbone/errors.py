"""Exception hierarchy shared by every module."""


class InputError(ValueError):
    """Caller supplied something outside an operation's contract."""


class PreconditionError(InputError):
    """A structural precondition (connectivity, separator, ...) does not hold."""


class GraphParseError(InputError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class OracleSizeError(InputError):
    """Graph is too large for exhaustive search."""


class GenerationError(RuntimeError):
    """An instance generator ran out of attempts."""


class InternalError(RuntimeError):
    """A guarantee that should be impossible to break was broken."""
