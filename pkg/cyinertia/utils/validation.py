# cyinertia/utils/validation.py
from ..algebra import Field
from ..errors import InvalidFieldError, PreconditionError


def validate_field(spec: str) -> Field:
    """
    Validate a field specification.

    Args:
        spec: ``"Q"`` or ``"Fp:<p>"`` with p an odd prime below 2^63

    Returns:
        Field: the parsed field

    Raises:
        InvalidFieldError: If the specification is malformed or p is not prime
    """
    if not isinstance(spec, str):
        raise InvalidFieldError("Field specification must be a string")
    return Field.parse(spec)


def validate_count(name: str, value: int, minimum: int = 1) -> int:
    """
    Validate a trial count, power bound or dimension.

    Raises:
        PreconditionError: If value is not an integer >= minimum
    """
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise PreconditionError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return value
