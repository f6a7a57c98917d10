# cyinertia/geometry/fibermaps.py
from __future__ import annotations

import logging
from dataclasses import InitVar, dataclass
from typing import Optional, Tuple, Union

from ..algebra import MPoly, normalize_together
from ..errors import DegenerateAxisError, DegenerateMapError, StructuralError, check_axis
from .hypersurface import MultiQuadric
from .points import IndeterminatePoint, Point

logger = logging.getLogger(__name__)

# Normalization scales the denominator row (C, D) first.
_LEAD_ORDER = (2, 3, 0, 1)


@dataclass(frozen=True)
class FiberMap:
    """
    x_axis -> (A x_axis + B) / (C x_axis + D), other coordinates fixed.

    A, B, C, D are free of x_axis and share one declared degree. Composition
    is the matrix product: (m1 o m2) has matrix M1 * M2.
    """

    axis: int
    A: MPoly
    B: MPoly
    C: MPoly
    D: MPoly
    verify: InitVar[bool] = True

    def __post_init__(self, verify: bool):
        entries = self.entries
        declared = self.A.declared_degree
        if any(e.declared_degree != declared for e in entries):
            raise StructuralError("Fiber map entries must share one declared degree")
        if not verify:
            return
        j0 = check_axis(self.axis, self.A.nvars)
        for e in entries:
            if e.degrees()[j0] != 0:
                raise StructuralError(f"Entry depends on its own axis x{self.axis}")
        if (self.A * self.D - self.B * self.C).is_zero:
            raise DegenerateMapError(f"AD - BC vanishes for the axis-{self.axis} map")

    @classmethod
    def build(cls, axis: int, A: MPoly, B: MPoly, C: MPoly, D: MPoly) -> "FiberMap":
        """Pad the entries to their common (componentwise max) declared degree."""
        declared = tuple(
            max(ds) for ds in zip(*(e.declared_degree for e in (A, B, C, D)))
        )
        return cls(axis, *(e.with_declared(declared) for e in (A, B, C, D)))

    @property
    def entries(self) -> Tuple[MPoly, MPoly, MPoly, MPoly]:
        return (self.A, self.B, self.C, self.D)

    @property
    def declared_degree(self) -> Tuple[int, ...]:
        return self.A.declared_degree

    def format(self) -> str:
        return "(" + ", ".join(e.format() for e in self.entries) + ")"

    def apply(self, point: Point) -> Union[Point, IndeterminatePoint]:
        """
        Image of ``point``; entries are evaluated projectively at the other
        coordinates and the axis pair [u:v] goes to [C v + D u : A v + B u].
        """
        u, v = point.coords[self.axis - 1]
        a, b, c, d = (e.evaluate_projective(point.coords) for e in self.entries)
        new_u = c * v + d * u
        new_v = a * v + b * u
        field = point.field
        if field.is_zero(new_u) and field.is_zero(new_v):
            return IndeterminatePoint(point, self.axis)
        return point.replace(self.axis, (new_u, new_v))

    def __call__(self, point: Point) -> Union[Point, IndeterminatePoint]:
        return self.apply(point)


def make_tau(X: MultiQuadric, axis: int) -> FiberMap:
    """tau_i: x_i -> -x_i - F1/F0, matrix (-F0, -F1, 0, F0)."""
    F0, F1, _ = _parts(X, axis, need_F2=False)
    return FiberMap.build(axis, -F0, -F1, MPoly.zero(F0.field, F0.declared_degree), F0)


def make_sigma(X: MultiQuadric, axis: int) -> FiberMap:
    """sigma_i: x_i -> F2 / (x_i F0), matrix (0, F2, F0, 0)."""
    F0, _, F2 = _parts(X, axis)
    zero = MPoly.zero(F0.field, F0.declared_degree)
    return FiberMap.build(axis, zero, F2, F0, zero)


def make_rho(X: MultiQuadric, axis: int) -> FiberMap:
    """rho_i = sigma_i o tau_i, matrix (0, F2, -F0, -F1)."""
    F0, F1, F2 = _parts(X, axis)
    zero = MPoly.zero(F0.field, F0.declared_degree)
    return FiberMap.build(axis, zero, F2, -F0, -F1)


def make_rho_inv(X: MultiQuadric, axis: int) -> FiberMap:
    """rho'_i = tau_i o sigma_i = rho_i^{-1}, matrix (-F1, -F2, F0, 0)."""
    F0, F1, F2 = _parts(X, axis)
    zero = MPoly.zero(F0.field, F0.declared_degree)
    return FiberMap.build(axis, -F1, -F2, F0, zero)


def compose_same_axis(m1: FiberMap, m2: FiberMap) -> FiberMap:
    """
    m1 after m2 as the matrix product M1 * M2, with common scalar content
    and common monomials removed from the entries.

    Scalars are therefore reported in primitive form: tau_1 o tau_1 on
    x^2 y^2 + x + y has F0^2 = y^4 stripped to the constant 1.
    """
    if m1.axis != m2.axis:
        raise StructuralError(f"Cannot compose axis {m1.axis} with axis {m2.axis}")
    A = m1.A * m2.A + m1.B * m2.C
    B = m1.A * m2.B + m1.B * m2.D
    C = m1.C * m2.A + m1.D * m2.C
    D = m1.C * m2.B + m1.D * m2.D
    A, B, C, D = normalize_together([A, B, C, D], _LEAD_ORDER)
    return FiberMap(m1.axis, A, B, C, D, verify=False)


def matrix_power(m: FiberMap, k: int) -> FiberMap:
    """m^k for k >= 1 by binary powering."""
    if k < 1:
        raise StructuralError(f"Power must be positive, got {k}")
    result: Optional[FiberMap] = None
    base = m
    while k:
        if k & 1:
            result = base if result is None else compose_same_axis(result, base)
        k >>= 1
        if k:
            base = compose_same_axis(base, base)
    return result


def is_scalar_identity(m: FiberMap) -> Optional[MPoly]:
    """The scalar s when the matrix is s * I (B = C = 0, A = D), else None."""
    if m.B.is_zero and m.C.is_zero and m.A == m.D and not m.A.is_zero:
        return m.A
    return None


def in_indeterminacy_union(X: MultiQuadric, point: Point) -> bool:
    """Whether some rho_i or rho_i^{-1} is undefined at ``point``."""
    for axis in range(1, X.n_plus_1 + 1):
        for maker in (make_rho, make_rho_inv):
            if isinstance(maker(X, axis).apply(point), IndeterminatePoint):
                return True
    return False


def _parts(X: MultiQuadric, axis: int, need_F2: bool = True):
    decomposition = X.decompose_axis(axis)
    if decomposition.F0.is_zero:
        raise DegenerateAxisError(f"F_{axis},0 vanishes identically")
    if need_F2 and decomposition.F2.is_zero:
        raise DegenerateAxisError(f"F_{axis},2 vanishes identically")
    return decomposition.parts
