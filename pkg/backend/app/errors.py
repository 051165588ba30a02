"""Exception hierarchy shared by the library and the command line.

Every error carries the process exit status the CLI reports for it.
"""

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3


class EwensError(Exception):
    exit_status = EXIT_DOMAIN


class DomainError(EwensError, ValueError):
    """Parameter outside the domain of an operation."""


class DimensionError(DomainError):
    """Requested size exceeds the size of a precomputed table."""


class DegenerateError(DomainError):
    """A standardization or ratio needs sigma > 0 (n >= 2)."""


class ConditionViolatedError(DomainError):
    def __init__(self, display: str, message: str = ""):
        self.display = display
        super().__init__(message or f"condition {display} does not hold")


class ResourceLimitError(EwensError):
    def __init__(self, what: str, requested: int, limit: int):
        self.limit = limit
        super().__init__(f"{what}={requested} exceeds the configured limit {limit}")


class UsageError(EwensError):
    exit_status = EXIT_USAGE
