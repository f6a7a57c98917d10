# cyinertia/algebra/mpoly.py
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from sympy.polys.rings import PolyElement

from ..errors import StructuralError
from .fields import Field, Scalar

Monomial = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class MPoly:
    """
    Sparse multivariate polynomial with a declared per-axis degree.

    The term map is a sympy ``PolyElement`` (a dict from exponent tuples to
    nonzero coefficients). ``declared_degree`` bounds every exponent and fixes
    the multihomogenization used by :meth:`evaluate_projective`. Equality
    compares term maps only.
    """

    field: Field
    poly: PolyElement
    declared_degree: Tuple[int, ...]

    def __post_init__(self):
        nvars = self.poly.ring.ngens
        if len(self.declared_degree) != nvars:
            raise StructuralError(
                f"declared_degree has {len(self.declared_degree)} entries "
                f"for {nvars} variables"
            )
        for monom in self.poly.keys():
            if any(e > d for e, d in zip(monom, self.declared_degree)):
                raise StructuralError(
                    f"Exponent {monom} exceeds declared degree {self.declared_degree}"
                )

    # -- construction -----------------------------------------------------

    @classmethod
    def from_terms(
        cls,
        field: Field,
        nvars: int,
        terms: Mapping[Monomial, Union[int, Scalar]],
        declared_degree: Sequence[int],
    ) -> "MPoly":
        ring = field.ring(nvars)
        poly = ring.zero
        for monom, coeff in terms.items():
            if len(monom) != nvars:
                raise StructuralError(f"Exponent {monom} has wrong length")
            c = field(coeff)
            if not field.is_zero(c):
                poly[tuple(monom)] = c
        return cls(field, poly, tuple(declared_degree))

    @classmethod
    def zero(cls, field: Field, declared_degree: Sequence[int]) -> "MPoly":
        return cls(field, field.ring(len(declared_degree)).zero, tuple(declared_degree))

    @classmethod
    def constant(
        cls, field: Field, value: Union[int, Scalar], declared_degree: Sequence[int]
    ) -> "MPoly":
        nvars = len(declared_degree)
        return cls.from_terms(field, nvars, {(0,) * nvars: value}, declared_degree)

    @classmethod
    def variable(
        cls, field: Field, index: int, declared_degree: Sequence[int]
    ) -> "MPoly":
        """The coordinate x_{index+1} (0-based ``index``)."""
        nvars = len(declared_degree)
        monom = tuple(1 if j == index else 0 for j in range(nvars))
        return cls.from_terms(field, nvars, {monom: 1}, declared_degree)

    def _wrap(self, poly: PolyElement, declared_degree: Sequence[int]) -> "MPoly":
        return MPoly(self.field, poly, tuple(declared_degree))

    # -- structure --------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self.poly.ring.ngens

    @property
    def is_zero(self) -> bool:
        return not self.poly

    @property
    def terms(self) -> Dict[Monomial, Scalar]:
        return dict(self.poly.items())

    def degrees(self) -> Tuple[int, ...]:
        """Actual maximum exponent per variable (0 for the zero polynomial)."""
        result = [0] * self.nvars
        for monom in self.poly.keys():
            result = [max(r, e) for r, e in zip(result, monom)]
        return tuple(result)

    def with_declared(self, declared_degree: Sequence[int]) -> "MPoly":
        """Same term map, homogenized to a larger declared degree."""
        return self._wrap(self.poly, declared_degree)

    def _check_compatible(self, other: "MPoly") -> None:
        if not isinstance(other, MPoly):
            raise StructuralError(f"Expected MPoly, got {type(other).__name__}")
        if self.field != other.field:
            raise StructuralError(
                f"Mixed fields {self.field.spec} and {other.field.spec}"
            )
        if self.nvars != other.nvars:
            raise StructuralError(
                f"Mismatched variable counts {self.nvars} and {other.nvars}"
            )

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "MPoly") -> "MPoly":
        self._check_compatible(other)
        declared = tuple(map(max, self.declared_degree, other.declared_degree))
        return self._wrap(self.poly + other.poly, declared)

    def __sub__(self, other: "MPoly") -> "MPoly":
        self._check_compatible(other)
        declared = tuple(map(max, self.declared_degree, other.declared_degree))
        return self._wrap(self.poly - other.poly, declared)

    def __mul__(self, other: "MPoly") -> "MPoly":
        self._check_compatible(other)
        declared = tuple(a + b for a, b in zip(self.declared_degree, other.declared_degree))
        return self._wrap(self.poly * other.poly, declared)

    def __neg__(self) -> "MPoly":
        return self._wrap(-self.poly, self.declared_degree)

    def scalar_mul(self, c: Union[int, Scalar]) -> "MPoly":
        return self._wrap(self.poly.mul_ground(self.field(c)), self.declared_degree)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.field == other.field and self.poly == other.poly

    def __hash__(self) -> int:
        return hash((self.field, frozenset(self.poly.items())))

    def __repr__(self) -> str:
        return f"MPoly({self.format()}, declared={self.declared_degree})"

    # -- evaluation -------------------------------------------------------

    def evaluate(self, values: Sequence[Scalar]) -> Scalar:
        """Affine substitution x_j = values[j]."""
        if len(values) != self.nvars:
            raise StructuralError(
                f"Expected {self.nvars} values, got {len(values)}"
            )
        if self.is_zero:
            return self.field.zero
        return self.poly(*[self.field(v) for v in values])

    @cached_property
    def homogenized(self) -> PolyElement:
        """
        Multihomogenization to ``declared_degree`` in the ring u1,v1,...

        Each monomial prod x_j^e_j becomes prod u_j^(d_j - e_j) v_j^e_j.
        """
        ring = self.field.homogeneous_ring(self.nvars)
        poly = ring.zero
        for monom, coeff in self.poly.items():
            key: List[int] = []
            for e, d in zip(monom, self.declared_degree):
                key.extend((d - e, e))
            poly[tuple(key)] = coeff
        return poly

    def evaluate_projective(self, coords: Iterable[Tuple[Scalar, Scalar]]) -> Scalar:
        """
        Evaluate the multihomogenization at coordinate pairs [u_j : v_j].

        Only zero/nonzero status and ratios of evaluations with the same
        declared degree are meaningful.
        """
        flat = [c for pair in coords for c in pair]
        if len(flat) != 2 * self.nvars:
            raise StructuralError(
                f"Expected {self.nvars} coordinate pairs, got {len(flat) // 2}"
            )
        if self.is_zero:
            return self.field.zero
        return self.homogenized(*flat)

    def partial_projective(
        self, coords: Sequence[Tuple[Scalar, Scalar]], index: int, wrt: str
    ) -> Scalar:
        """Partial derivative of the multihomogenization with respect to
        u_{index+1} (``wrt="u"``) or v_{index+1} (``wrt="v"``), evaluated."""
        h = self.homogenized
        gen = h.ring.gens[2 * index + (1 if wrt == "v" else 0)]
        flat = [c for pair in coords for c in pair]
        derivative = h.diff(gen)
        if not derivative:
            return self.field.zero
        return derivative(*flat)

    # -- formatting -------------------------------------------------------

    def format(self, names: Sequence[str] = ()) -> str:
        """Human-readable form with exact coefficients, highest terms first."""
        if self.is_zero:
            return "0"
        names = list(names) or [f"x{j + 1}" for j in range(self.nvars)]
        parts: List[str] = []
        for monom, coeff in sorted(self.poly.items(), key=lambda t: t[0], reverse=True):
            factors = []
            for name, e in zip(names, monom):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            text = self.field.format(coeff)
            negative = text.startswith("-")
            if negative:
                text = text[1:]
            if factors:
                body = "*".join(factors) if text == "1" else f"{text}*" + "*".join(factors)
            else:
                body = text
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)


def normalize_together(
    polys: Sequence[MPoly], lead_order: Sequence[int] = ()
) -> List[MPoly]:
    """
    Remove common scalar content and a common monomial from ``polys``.

    Over Q the result has coprime integer coefficients and the leading
    coefficient of the first nonzero poly in ``lead_order`` is positive; over
    F_p that coefficient becomes 1. Stripping x^m lowers every declared
    degree by m. Full polynomial GCDs are not removed.
    """
    if not polys:
        return []
    first = polys[0]
    for p in polys[1:]:
        first._check_compatible(p)
    nonzero = [p for p in polys if not p.is_zero]
    if not nonzero:
        return list(polys)
    field = first.field
    ring = first.poly.ring
    nvars = first.nvars

    shift = [
        min(monom[j] for p in nonzero for monom in p.poly.keys()) for j in range(nvars)
    ]
    if any(shift):
        stripped = []
        for p in polys:
            poly = ring.zero
            for monom, coeff in p.poly.items():
                poly[tuple(e - s for e, s in zip(monom, shift))] = coeff
            declared = tuple(d - s for d, s in zip(p.declared_degree, shift))
            stripped.append(MPoly(field, poly, declared))
        polys = stripped

    order = list(lead_order) or list(range(len(polys)))
    lead_poly = next(polys[k] for k in order if not polys[k].is_zero)
    lead = lead_poly.poly.LC
    domain = field.domain
    if field.is_rational:
        coeffs = [c for p in polys for c in p.poly.values()]
        content = reduce(domain.gcd, coeffs)
        factor = domain.one / content
        if lead < 0:
            factor = -factor
    else:
        factor = domain.one / lead
    if factor == domain.one:
        return list(polys)
    return [p._wrap(p.poly.mul_ground(factor), p.declared_degree) for p in polys]


def primitive(p: MPoly) -> MPoly:
    """Single-polynomial form of :func:`normalize_together`."""
    return normalize_together([p])[0]
