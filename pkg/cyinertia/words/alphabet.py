# cyinertia/words/alphabet.py
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from ..errors import AlphabetError, WordParseError


class GeneratorKind(str, Enum):
    TAU = "T"
    SIGMA = "S"
    RHO = "R"
    RHO_INV = "R^-1"
    IOTA = "I"

    @property
    def restricted(self) -> bool:
        return self is GeneratorKind.IOTA


@dataclass(frozen=True)
class Generator:
    kind: GeneratorKind
    axis: int

    def inverse(self) -> "Generator":
        if self.kind is GeneratorKind.RHO:
            return Generator(GeneratorKind.RHO_INV, self.axis)
        if self.kind is GeneratorKind.RHO_INV:
            return Generator(GeneratorKind.RHO, self.axis)
        return self

    def __str__(self) -> str:
        if self.kind is GeneratorKind.RHO_INV:
            return f"R{self.axis}^-1"
        return f"{self.kind.value}{self.axis}"


@dataclass(frozen=True)
class Word:
    """
    A sequence of generator letters. The leftmost letter is applied last:
    ``Word([a, b])`` acts as a o b.
    """

    letters: Tuple[Generator, ...] = ()

    def __post_init__(self):
        kinds = {letter.kind.restricted for letter in self.letters}
        if len(kinds) > 1:
            raise AlphabetError("Cannot mix restricted (I) and ambient letters")

    @property
    def restricted(self) -> Optional[bool]:
        """True for iota-words, False for ambient words, None when empty."""
        if not self.letters:
            return None
        return self.letters[0].kind.restricted

    @property
    def axes(self) -> Tuple[int, ...]:
        return tuple(letter.axis for letter in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple(letter.inverse() for letter in reversed(self.letters)))

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters)


_TOKEN_RE = re.compile(r"^([TSRI])(\d+)(?:\^([+-]?\d+))?$")
_KINDS = {"T": GeneratorKind.TAU, "S": GeneratorKind.SIGMA, "I": GeneratorKind.IOTA}


def parse_word(text: str, n_plus_1: int) -> Word:
    """
    Parse whitespace-separated tokens like ``"R1 R2^-3 T1"``.

    Any integer power is accepted and expanded letter by letter, so ``T1^3``
    is ``T1 T1 T1`` (a shorthand, not a new generator). Only R tokens take
    negative exponents; T, S and I are involutions.
    """
    letters = []
    for token in (text or "").split():
        match = _TOKEN_RE.match(token)
        if not match:
            raise WordParseError(f"Unknown token {token!r}")
        letter, axis_text, power_text = match.groups()
        axis = int(axis_text)
        if not 1 <= axis <= n_plus_1:
            raise WordParseError(f"Axis {axis} in {token!r} outside 1..{n_plus_1}")
        power = int(power_text) if power_text is not None else 1
        if letter == "R":
            kind = GeneratorKind.RHO if power > 0 else GeneratorKind.RHO_INV
            letters.extend([Generator(kind, axis)] * abs(power))
            continue
        if power < 0:
            raise WordParseError(f"Negative power on involution {token!r}")
        letters.extend([Generator(_KINDS[letter], axis)] * power)
    try:
        return Word(tuple(letters))
    except AlphabetError as e:
        raise WordParseError(f"{e.message} in {text!r}")
