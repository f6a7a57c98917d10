from __future__ import annotations
from typing import Optional


class CYException(Exception):
    """Base exception for all cyinertia errors."""

    def __init__(self, message: str, code: str):
        self.message = message
        self.code = code
        super().__init__(self.message)


class StructuralError(CYException):
    """Raised when operands live over different fields or variable counts."""

    def __init__(self, message: str):
        super().__init__(message, "STRUCTURAL")


class InvalidFieldError(CYException):
    """Raised when a field specification is malformed or not supported."""

    def __init__(self, message: str):
        super().__init__(message, "INVALID_FIELD")


class InvalidPointError(CYException):
    """Raised when a point has a [0:0] coordinate or the wrong shape."""

    def __init__(self, message: str):
        super().__init__(message, "INVALID_POINT")


class AxisRangeError(CYException):
    """Raised when an axis index is outside 1..n_plus_1."""

    def __init__(self, message: str):
        super().__init__(message, "AXIS_RANGE")


class DegenerateAxisError(CYException):
    """Raised when an axis decomposition cannot carry the requested map."""

    def __init__(self, message: str):
        super().__init__(message, "DEGENERATE_AXIS")


class DegenerateMapError(CYException):
    """Raised when a fiber map matrix has identically vanishing determinant."""

    def __init__(self, message: str):
        super().__init__(message, "DEGENERATE_MAP")


class NotOnHypersurfaceError(CYException):
    """Raised when an operation needs a point of X and gets one off it."""

    def __init__(self, message: str):
        super().__init__(message, "NOT_ON_HYPERSURFACE")


class SamplingExhaustedError(CYException):
    """Raised when the fiber sampler runs out of attempts."""

    def __init__(self, message: str):
        super().__init__(message, "SAMPLING_EXHAUSTED")


class GenerationExhaustedError(CYException):
    """Raised when random generation never produced a generic hypersurface."""

    def __init__(self, message: str):
        super().__init__(message, "GENERATION_EXHAUSTED")


class WordParseError(CYException):
    """Raised when a word string does not follow the token grammar."""

    def __init__(self, message: str):
        super().__init__(message, "WORD_PARSE")


class AlphabetError(CYException):
    """Raised when a word uses letters outside the expected alphabet."""

    def __init__(self, message: str):
        super().__init__(message, "ALPHABET")


class PreconditionError(CYException):
    """Raised when an operation's documented precondition does not hold."""

    def __init__(self, message: str):
        super().__init__(message, "PRECONDITION")


class HypersurfaceFormatError(CYException):
    """Raised when a hypersurface file is malformed. Carries the line number."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        full_msg = f"line {line}: {message}" if line is not None else message
        super().__init__(full_msg, "HYPERSURFACE_FORMAT")


#
# Utility functions for bounds checks shared by several modules
#


def check_axis(axis: int, n_plus_1: int) -> int:
    """Validate a 1-based axis and return its 0-based index."""
    if isinstance(axis, bool) or not isinstance(axis, int):
        raise AxisRangeError(f"Axis must be an integer, got {axis!r}")
    if not 1 <= axis <= n_plus_1:
        raise AxisRangeError(f"Axis {axis} outside 1..{n_plus_1}")
    return axis - 1
