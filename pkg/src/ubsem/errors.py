"""Exception hierarchy shared by every module."""


class ArgumentationError(Exception):
    """Base class for all errors raised by ubsem."""


class FrameworkError(ArgumentationError, ValueError):
    """Malformed framework: duplicate ids, undeclared endpoints, unknown arguments."""


class EmptyFrameworkError(FrameworkError):
    """A semantics operation was asked to work on a framework with no arguments."""


class PreconditionError(ArgumentationError, ValueError):
    pass


class ResourceLimitError(ArgumentationError):
    """Enumeration refused because the instance exceeds a configured limit."""


class ParseError(ArgumentationError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
