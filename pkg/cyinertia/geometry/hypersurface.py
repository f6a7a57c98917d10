# cyinertia/geometry/hypersurface.py
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple, Union

from ..algebra import Field, Monomial, MPoly, Scalar
from ..errors import NotOnHypersurfaceError, StructuralError, check_axis
from ..models import AxisGenericity, GenericityReport
from .points import Point, check_point

logger = logging.getLogger(__name__)

MAX_EXPONENT = 2


@dataclass(frozen=True)
class AxisDecomposition:
    """
    X = F0 * x_i^2 + F1 * x_i + F2 with F_j free of x_i.

    The F_j stay in the ring of all n+1 variables with exponent 0 and
    declared degree 0 on the stripped axis.
    """

    axis: int
    F0: MPoly
    F1: MPoly
    F2: MPoly

    @property
    def parts(self) -> Tuple[MPoly, MPoly, MPoly]:
        return (self.F0, self.F1, self.F2)

    def discriminant(self) -> MPoly:
        """F1^2 - 4 F0 F2."""
        return self.F1 * self.F1 - (self.F0 * self.F2).scalar_mul(4)

    def assemble(self) -> MPoly:
        """Inverse of :meth:`MultiQuadric.decompose_axis`."""
        field = self.F0.field
        declared = tuple(
            MAX_EXPONENT if j == self.axis - 1 else d
            for j, d in enumerate(self.F0.declared_degree)
        )
        x_i = MPoly.variable(field, self.axis - 1, _unit(len(declared), self.axis - 1))
        total = self.F2.with_declared(declared)
        total = total + (self.F1 * x_i).with_declared(declared)
        total = total + (self.F0 * x_i * x_i).with_declared(declared)
        return total

    def evaluate_at(self, point: Point) -> Tuple[Scalar, Scalar, Scalar]:
        """(F0, F1, F2) at the point's other coordinates, projectively."""
        return tuple(part.evaluate_projective(point.coords) for part in self.parts)


class MultiQuadric:
    """A hypersurface of multidegree (2, ..., 2) in (P^1)^{n+1}."""

    def __init__(self, poly: MPoly):
        """
        :param poly: defining polynomial, degree <= 2 in every variable
        :raises StructuralError: if poly is zero or exceeds degree 2 somewhere
        """
        if poly.is_zero:
            raise StructuralError("The defining polynomial is identically zero")
        if any(d > MAX_EXPONENT for d in poly.degrees()):
            raise StructuralError(f"Degrees {poly.degrees()} exceed 2 on some axis")
        self.poly = poly.with_declared((MAX_EXPONENT,) * poly.nvars)
        self._decompositions: Dict[int, AxisDecomposition] = {}

    @classmethod
    def from_terms(
        cls,
        field: Field,
        n_plus_1: int,
        terms: Mapping[Monomial, Union[int, Scalar]],
    ) -> "MultiQuadric":
        poly = MPoly.from_terms(field, n_plus_1, terms, (MAX_EXPONENT,) * n_plus_1)
        return cls(poly)

    @property
    def field(self) -> Field:
        return self.poly.field

    @property
    def n_plus_1(self) -> int:
        return self.poly.nvars

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiQuadric):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self) -> int:
        return hash(self.poly)

    def __repr__(self) -> str:
        return f"MultiQuadric({self.poly.format()} over {self.field.spec})"

    def decompose_axis(self, axis: int) -> AxisDecomposition:
        """
        Split the equation along ``axis`` (1-based).

        F_j collects the terms with exponent 2 - j in x_axis, x_axis stripped.
        """
        j0 = check_axis(axis, self.n_plus_1)
        cached = self._decompositions.get(axis)
        if cached is not None:
            return cached
        buckets: List[Dict[Monomial, Scalar]] = [{}, {}, {}]
        for monom, coeff in self.poly.terms.items():
            stripped = monom[:j0] + (0,) + monom[j0 + 1 :]
            buckets[MAX_EXPONENT - monom[j0]][stripped] = coeff
        declared = _unit(self.n_plus_1, j0, value=0, fill=MAX_EXPONENT)
        parts = [
            MPoly.from_terms(self.field, self.n_plus_1, bucket, declared)
            for bucket in buckets
        ]
        decomposition = AxisDecomposition(axis, *parts)
        self._decompositions[axis] = decomposition
        return decomposition

    def discriminant_axis(self, axis: int) -> MPoly:
        """Delta_i = F1^2 - 4 F0 F2 in the remaining variables."""
        return self.decompose_axis(axis).discriminant()

    def genericity_check(self) -> GenericityReport:
        """
        Checkable proxy for genericity: on every axis the discriminant and
        F_{i,0}, F_{i,2} must not vanish identically.
        """
        axes = []
        for axis in range(1, self.n_plus_1 + 1):
            decomposition = self.decompose_axis(axis)
            vanishing = tuple(
                j for j, part in enumerate(decomposition.parts) if part.is_zero
            )
            axes.append(
                AxisGenericity(
                    axis=axis,
                    discriminant_vanishes=decomposition.discriminant().is_zero,
                    vanishing_parts=vanishing,
                )
            )
        report = GenericityReport(tuple(axes))
        logger.debug("Genericity of %r: %s", self, report.failures or "PASS")
        return report

    def contains(self, point: Point) -> bool:
        check_point(point, self.n_plus_1, self.field)
        return self.field.is_zero(self.poly.evaluate_projective(point.coords))

    def singular_at(self, point: Point) -> bool:
        """
        True iff every partial derivative of the multihomogenization, with
        respect to each u_j and v_j, vanishes at ``point``.

        :raises NotOnHypersurfaceError: if the point is not on X
        """
        if not self.contains(point):
            raise NotOnHypersurfaceError(f"{point.format()} is not on X")
        for j in range(self.n_plus_1):
            for wrt in ("u", "v"):
                value = self.poly.partial_projective(point.coords, j, wrt)
                if not self.field.is_zero(value):
                    return False
        return True


def _unit(nvars: int, index: int, value: int = 1, fill: int = 0) -> Tuple[int, ...]:
    return tuple(value if j == index else fill for j in range(nvars))
