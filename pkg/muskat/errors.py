"""
Error kinds raised by the muskat package.

Invalid arguments raise the builtin ValueError; the classes below cover the
numerical and configuration failures the commands map to exit codes.
"""
from typing import Any, Dict, Optional


class NumericDomainError(ArithmeticError):
    pass


class ConvergenceError(RuntimeError):
    pass


class OutOfRangeError(ValueError):
    pass


class NotIntegrableError(ValueError):
    pass


class StepFailure(RuntimeError):
    """Raised when a time step produces non-finite values."""

    def __init__(self, message: str, t: float, diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(f"{message} (t={t!r})")
        self.t = t
        self.diagnostics = diagnostics or {}


class ConfigError(ValueError):
    """Configuration problem located by a dotted field path and, when known, a line number."""

    def __init__(self, message: str, field: str = "", line: Optional[int] = None):
        location = field or "<document>"
        if line is not None:
            location = f"{location} (line {line})"
        super().__init__(f"{location}: {message}")
        self.field = field
        self.line = line
