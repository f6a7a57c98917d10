from .conversion import format_pair, parse_coordinate, parse_point
from .validation import validate_count, validate_field
from .decorators import CYResult, handle_errors

__all__ = [
    "format_pair",
    "parse_coordinate",
    "parse_point",
    "validate_count",
    "validate_field",
    "CYResult",
    "handle_errors",
]
