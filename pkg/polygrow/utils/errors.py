"""
Errors
Exception hierarchy shared by the library, the batch runner and the CLI
"""

from typing import Optional


class PolyGrowError(Exception):
    """Base class for every error raised by polygrow"""


class DegenerateError(PolyGrowError):
    """Raised when a point set does not span a two-dimensional polygon"""


class RepositionError(PolyGrowError):
    """Raised when a polygon cannot be placed in its width box by shearing"""


class ContractError(PolyGrowError):
    """Raised when an operation is called outside of its documented contract"""


class DomainError(PolyGrowError):
    """Raised when an argument lies outside the domain of a formula"""


class ConfigError(PolyGrowError):
    """Raised when the master configuration cannot be loaded or is invalid"""


class RecordFormatError(PolyGrowError):
    def __init__(self, message: str, line_number: Optional[int] = None):
        """Initialize a record error, optionally tagged with a 1-based line number"""
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
