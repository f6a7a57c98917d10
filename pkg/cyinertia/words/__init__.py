from .alphabet import Generator, GeneratorKind, Word, parse_word
from .reduction import (
    lift,
    random_iota_word,
    random_rho_word,
    reduce_rho_free,
    restrict_to_x,
    uc_reduce,
)

__all__ = [
    "Generator",
    "GeneratorKind",
    "Word",
    "parse_word",
    "lift",
    "random_iota_word",
    "random_rho_word",
    "reduce_rho_free",
    "restrict_to_x",
    "uc_reduce",
]
