# cyinertia/algebra/fields.py
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Optional, Union

from sympy.polys.domains import GF, QQ
from sympy.polys.rings import PolyRing

from ..errors import InvalidFieldError, StructuralError
from ..libs.number_theory import NumberTheoryHelper

# Residues of F_p are held as Python ints in [0, p) at the API boundary and
# as sympy domain elements inside polynomials.
Scalar = Any

MAX_CHARACTERISTIC = 2**63
_FIELD_RE = re.compile(r"^\s*(?:(Q)|Fp:(\d+))\s*$")


@dataclass(frozen=True)
class Field:
    """
    An exact coefficient field: the rationals (characteristic 0) or F_p.

    Elements are sympy domain elements (``QQ`` or ``GF(p)``); use
    :meth:`__call__` to convert ints, Fractions or strings into the field.
    """

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p == 0:
            return
        if p == 2 or p >= MAX_CHARACTERISTIC or not NumberTheoryHelper.is_prime(p):
            raise InvalidFieldError(f"F_p needs an odd prime p < 2^63, got {p}")

    @classmethod
    def rationals(cls) -> "Field":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(int(p))

    @classmethod
    def parse(cls, spec: str) -> "Field":
        """Parse ``"Q"`` or ``"Fp:<p>"``."""
        match = _FIELD_RE.match(spec or "")
        if not match:
            raise InvalidFieldError(f"Field must be 'Q' or 'Fp:<p>', got {spec!r}")
        if match.group(1):
            return cls.rationals()
        return cls.prime(int(match.group(2)))

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def spec(self) -> str:
        return "Q" if self.is_rational else f"Fp:{self.characteristic}"

    def __str__(self) -> str:
        return self.spec

    @cached_property
    def domain(self):
        """The sympy domain carrying the arithmetic."""
        if self.is_rational:
            return QQ
        return GF(self.characteristic, symmetric=False)

    def ring(self, nvars: int) -> PolyRing:
        """Polynomial ring in x1..x_nvars (sympy caches equal rings)."""
        names = ",".join(f"x{j + 1}" for j in range(nvars))
        return PolyRing(names, self.domain)

    def homogeneous_ring(self, nvars: int) -> PolyRing:
        """Ring in u1,v1,...,u_n,v_n for multihomogenized polynomials."""
        names = ",".join(f"u{j + 1},v{j + 1}" for j in range(nvars))
        return PolyRing(names, self.domain)

    @property
    def zero(self) -> Scalar:
        return self.domain.zero

    @property
    def one(self) -> Scalar:
        return self.domain.one

    def __call__(self, value: Union[int, Fraction, str, Scalar]) -> Scalar:
        """Convert an int, Fraction, ``"a/b"`` string or domain element."""
        if isinstance(value, str):
            value = _parse_fraction(value)
        if isinstance(value, bool):
            raise StructuralError("Booleans are not field elements")
        if isinstance(value, Fraction):
            if self.is_rational:
                return QQ(value.numerator, value.denominator)
            num = self.domain(value.numerator)
            den = self.domain(value.denominator)
            if self.is_zero(den):
                raise StructuralError(
                    f"Denominator of {value} vanishes in {self.spec}"
                )
            return num / den
        if isinstance(value, int):
            return self.domain(value)
        return self.domain.convert(value)

    def is_zero(self, a: Scalar) -> bool:
        return a == self.domain.zero

    def residue(self, a: Scalar) -> int:
        """Canonical representative in [0, p) of an F_p element."""
        if self.is_rational:
            raise StructuralError("residue() is only defined over F_p")
        return int(a) % self.characteristic

    def to_fraction(self, a: Scalar) -> Fraction:
        """Exact rational value of a QQ element."""
        if not self.is_rational:
            raise StructuralError("to_fraction() is only defined over Q")
        return Fraction(int(QQ.numer(a)), int(QQ.denom(a)))

    def format(self, a: Scalar) -> str:
        """``"num/den"`` (or ``"num"``) over Q, the residue over F_p."""
        if self.is_rational:
            f = self.to_fraction(a)
            if f.denominator == 1:
                return str(f.numerator)
            return f"{f.numerator}/{f.denominator}"
        return str(self.residue(a))

    def random_element(
        self, rng: random.Random, bound: int = 20, denominator_bound: int = 1
    ) -> Scalar:
        """Uniform residue over F_p; over Q a numerator in [-bound, bound]
        and a denominator in [1, denominator_bound]."""
        if self.is_rational:
            num = rng.randint(-bound, bound)
            den = rng.randint(1, max(1, denominator_bound))
            return QQ(num, den)
        return self.domain(rng.randrange(self.characteristic))

    def sqrt(self, a: Scalar) -> Optional[Scalar]:
        """Square root in F_p, smaller canonical representative first."""
        if self.is_rational:
            raise StructuralError("Square roots are only sampled over F_p")
        root = NumberTheoryHelper.sqrt(self.residue(a), self.characteristic)
        return None if root is None else self.domain(root)


def sqrt_mod_p(a: Scalar, field: Field) -> Optional[Scalar]:
    """Square root of ``a`` in F_p or ``None`` when ``a`` is a non-residue."""
    return field.sqrt(field(a) if isinstance(a, (int, Fraction, str)) else a)


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise StructuralError(f"Invalid scalar {text!r}: {e}")
