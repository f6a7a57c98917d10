import re
from typing import List, Tuple

from ..algebra import Field, Scalar
from ..errors import CYException, InvalidPointError
from ..geometry.points import Point

_PAIR_RE = re.compile(r"^\[\s*([^:\]]+?)\s*:\s*([^:\]]+?)\s*\]$")


def _split_coordinates(text: str) -> List[str]:
    """Split on commas that are not inside [u:v] brackets."""
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    parts.append("".join(current).strip())
    return parts


def parse_coordinate(text: str, field: Field) -> Tuple[Scalar, Scalar]:
    """
    One coordinate: an affine value ``"3"``, ``"-1/2"`` or a pair ``"[u:v]"``.
    ``"inf"`` is accepted for [0:1].
    """
    text = text.strip()
    try:
        if text.lower() in ("inf", "oo", "∞"):
            return (field.zero, field.one)
        match = _PAIR_RE.match(text)
        if match:
            return (field(match.group(1)), field(match.group(2)))
        return (field.one, field(text))
    except CYException as e:
        raise InvalidPointError(f"Invalid coordinate {text!r}: {e.message}")


def parse_point(text: str, field: Field, n_plus_1: int) -> Point:
    """
    Parse ``"1,1"``, ``"[0:1],2"`` and similar comma-separated mixes.

    Returns:
        Point: validated point with ``n_plus_1`` coordinates

    Raises:
        InvalidPointError: on malformed text, wrong length or a [0:0] pair
    """
    if not text or not text.strip():
        raise InvalidPointError("Empty point")
    parts = _split_coordinates(text)
    if len(parts) != n_plus_1:
        raise InvalidPointError(
            f"Point {text!r} has {len(parts)} coordinates, expected {n_plus_1}"
        )
    return Point(field, tuple(parse_coordinate(part, field) for part in parts))


def format_pair(point: Point, axis: int) -> str:
    """Exact ``[u:v]`` form of one coordinate."""
    u, v = point.coords[axis - 1]
    return f"[{point.field.format(u)}:{point.field.format(v)}]"
