# cyinertia/geometry/points.py
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from ..algebra import Field, Scalar
from ..errors import InvalidPointError

Pair = Tuple[Scalar, Scalar]


@dataclass(frozen=True)
class Point:
    """A point of (P^1)^{n+1}: one pair [u:v] per factor, affine x = v/u."""

    field: Field
    coords: Tuple[Pair, ...]

    def __post_init__(self):
        if not self.coords:
            raise InvalidPointError("A point needs at least one coordinate")
        for j, (u, v) in enumerate(self.coords):
            if self.field.is_zero(u) and self.field.is_zero(v):
                raise InvalidPointError(f"Coordinate {j + 1} is [0:0]")

    @classmethod
    def affine(cls, field: Field, values: Sequence[Union[int, Scalar]]) -> "Point":
        return cls(field, tuple((field.one, field(v)) for v in values))

    @classmethod
    def from_pairs(
        cls, field: Field, pairs: Sequence[Tuple[Union[int, Scalar], Union[int, Scalar]]]
    ) -> "Point":
        return cls(field, tuple((field(u), field(v)) for u, v in pairs))

    @property
    def n_plus_1(self) -> int:
        return len(self.coords)

    def is_infinite(self, axis: int) -> bool:
        """True when the 1-based ``axis`` coordinate is [0:1]."""
        return self.field.is_zero(self.coords[axis - 1][0])

    def affine_value(self, axis: int) -> Optional[Scalar]:
        """v/u on the 1-based ``axis``; None at infinity."""
        u, v = self.coords[axis - 1]
        if self.field.is_zero(u):
            return None
        return v / u

    def replace(self, axis: int, pair: Pair) -> "Point":
        coords = list(self.coords)
        coords[axis - 1] = pair
        return Point(self.field, tuple(coords))

    def projectively_equal(self, other: "Point") -> bool:
        """Pairwise u1*v2 == u2*v1 on every factor."""
        if self.field != other.field or self.n_plus_1 != other.n_plus_1:
            return False
        return all(
            u1 * v2 == u2 * v1
            for (u1, v1), (u2, v2) in zip(self.coords, other.coords)
        )

    def format(self) -> str:
        """Affine values where defined, ``[u:v]`` pairs at infinity."""
        parts = []
        for u, v in self.coords:
            if self.field.is_zero(u):
                parts.append(f"[{self.field.format(u)}:{self.field.format(v)}]")
            else:
                parts.append(self.field.format(v / u))
        return "(" + ", ".join(parts) + ")"

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class IndeterminatePoint:
    """Outcome of applying a map at a point of its indeterminacy locus."""

    point: Point
    axis: int
    letter_index: Optional[int] = None

    def format(self) -> str:
        where = f" at letter {self.letter_index}" if self.letter_index is not None else ""
        return f"indeterminate on axis {self.axis}{where}: {self.point.format()}"

    def __str__(self) -> str:
        return self.format()


def check_point(point: Point, n_plus_1: int, field: Field) -> None:
    """Raise InvalidPointError unless ``point`` fits the ambient space."""
    if point.field != field:
        raise InvalidPointError(f"Point over {point.field.spec}, expected {field.spec}")
    if point.n_plus_1 != n_plus_1:
        raise InvalidPointError(
            f"Point has {point.n_plus_1} coordinates, expected {n_plus_1}"
        )
