# cyinertia/words/reduction.py
import random
from typing import List

from ..errors import AlphabetError
from .alphabet import Generator, GeneratorKind, Word

_RHO_KINDS = (GeneratorKind.RHO, GeneratorKind.RHO_INV)


def reduce_rho_free(word: Word) -> Word:
    """Free reduction in <rho_1, ..., rho_{n+1}>: cancel rho_i rho_i^-1 pairs."""
    stack: List[Generator] = []
    for letter in word:
        if letter.kind not in _RHO_KINDS:
            raise AlphabetError(f"{letter} is not a rho letter")
        if stack and stack[-1] == letter.inverse():
            stack.pop()
        else:
            stack.append(letter)
    return Word(tuple(stack))


def uc_reduce(word: Word) -> Word:
    """Reduction in the universal Coxeter group: cancel iota_i iota_i."""
    stack: List[Generator] = []
    for letter in word:
        if letter.kind is not GeneratorKind.IOTA:
            raise AlphabetError(f"{letter} is not an iota letter")
        if stack and stack[-1] == letter:
            stack.pop()
        else:
            stack.append(letter)
    return Word(tuple(stack))


def restrict_to_x(word: Word) -> Word:
    """
    Image in Bir(X): tau_i, sigma_i -> iota_i and rho_i^{+-1} -> iota_i iota_i,
    followed by universal Coxeter reduction.
    """
    letters: List[Generator] = []
    for letter in word:
        iota = Generator(GeneratorKind.IOTA, letter.axis)
        if letter.kind in _RHO_KINDS:
            letters.extend((iota, iota))
        else:
            letters.append(iota)
    return uc_reduce(Word(tuple(letters)))


def lift(word: Word, lift: str = "tau") -> Word:
    """Ambient lift of an iota-word through tau_i (default) or sigma_i."""
    kinds = {"tau": GeneratorKind.TAU, "sigma": GeneratorKind.SIGMA}
    if lift not in kinds:
        raise AlphabetError(f"Lift must be 'tau' or 'sigma', got {lift!r}")
    letters = []
    for letter in word:
        if letter.kind is GeneratorKind.IOTA:
            letters.append(Generator(kinds[lift], letter.axis))
        else:
            letters.append(letter)
    return Word(tuple(letters))


def random_rho_word(n_plus_1: int, length: int, rng: random.Random) -> Word:
    """A freely reduced rho-word of exactly ``length`` letters."""
    letters: List[Generator] = []
    while len(letters) < length:
        kind = rng.choice(_RHO_KINDS)
        letter = Generator(kind, rng.randint(1, n_plus_1))
        if letters and letters[-1] == letter.inverse():
            continue
        letters.append(letter)
    return Word(tuple(letters))


def random_iota_word(n_plus_1: int, length: int, rng: random.Random) -> Word:
    """An unreduced iota-word of ``length`` letters."""
    return Word(
        tuple(
            Generator(GeneratorKind.IOTA, rng.randint(1, n_plus_1))
            for _ in range(length)
        )
    )
