"""Exception hierarchy shared by the services and the command layer."""
from typing import List, Optional


class HomLieError(ValueError):
    """Base class for every error raised by the homlie services."""
    exit_code = 1


class DimensionMismatchError(HomLieError):
    exit_code = 2


class ParseError(HomLieError):
    """Malformed input file. `path` is the field path of the offending value."""
    exit_code = 2

    def __init__(self, message: str, path: str = "", source: Optional[str] = None):
        self.detail = message
        self.path = path
        self.source = source
        location = ""
        if source:
            location += f"{source}: "
        if path:
            location += f"{path}: "
        super().__init__(f"{location}{message}")


class ValidationError(HomLieError):
    """An algebra or module failed its axioms where an accepted one is required."""

    def __init__(self, message: str, report=None):
        self.report = report
        super().__init__(message)


class NotAnIdealError(HomLieError):
    pass


class NotASubmoduleError(HomLieError):
    pass


class HypothesisError(HomLieError):
    """The stated hypotheses of a construction do not hold."""

    def __init__(self, message: str, failed: Optional[List[str]] = None):
        self.failed = list(failed or [])
        if self.failed:
            message = f"{message}: {'; '.join(self.failed)}"
        super().__init__(message)


class ConsistencyError(HomLieError):
    """A property guaranteed by the theory failed to hold. Always a bug."""
    exit_code = 3


class WindowError(HomLieError):
    exit_code = 2
