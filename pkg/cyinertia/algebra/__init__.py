from .fields import Field, Scalar, sqrt_mod_p
from .mpoly import MPoly, Monomial, normalize_together, primitive

__all__ = [
    "Field",
    "Scalar",
    "sqrt_mod_p",
    "MPoly",
    "Monomial",
    "normalize_together",
    "primitive",
]
