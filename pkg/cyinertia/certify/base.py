# cyinertia/certify/base.py
from __future__ import annotations

import logging
from typing import Callable, Dict, List, Optional, Tuple, Union

from ..errors import PreconditionError, StructuralError
from ..geometry import (
    FiberMap,
    IndeterminatePoint,
    MultiQuadric,
    Point,
    make_rho,
    make_rho_inv,
    make_sigma,
    make_tau,
)
from ..geometry.points import check_point
from ..words import Generator, GeneratorKind, Word

logger = logging.getLogger(__name__)

Outcome = Union[Point, IndeterminatePoint]

_MAKERS: Dict[GeneratorKind, Callable[[MultiQuadric, int], FiberMap]] = {
    GeneratorKind.TAU: make_tau,
    GeneratorKind.SIGMA: make_sigma,
    GeneratorKind.RHO: make_rho,
    GeneratorKind.RHO_INV: make_rho_inv,
}


class WordEvaluator:
    """Instantiates letters against X and applies words pointwise"""

    def __init__(
        self,
        X: MultiQuadric,
        lift: str = "tau",
        overrides: Optional[Dict[Tuple[GeneratorKind, int], FiberMap]] = None,
    ):
        """
        :param X: the hypersurface whose decompositions define the letters
        :param lift: ambient lift of iota letters, "tau" or "sigma"
        :param overrides: replacement maps keyed by (kind, axis)
        """
        if lift not in ("tau", "sigma"):
            raise StructuralError(f"Lift must be 'tau' or 'sigma', got {lift!r}")
        self.X = X
        self.lift = lift
        self._maps: Dict[Tuple[GeneratorKind, int], FiberMap] = dict(overrides or {})

    def map_for(self, letter: Generator) -> FiberMap:
        kind = letter.kind
        if kind is GeneratorKind.IOTA:
            kind = GeneratorKind.TAU if self.lift == "tau" else GeneratorKind.SIGMA
        key = (kind, letter.axis)
        if key not in self._maps:
            self._maps[key] = _MAKERS[kind](self.X, letter.axis)
        return self._maps[key]

    def trace(self, word: Word, point: Point) -> List[Outcome]:
        """
        The point followed by its image after each letter, rightmost letter
        first. Stops at the first indeterminate letter.
        """
        check_point(point, self.X.n_plus_1, self.X.field)
        if any(axis > self.X.n_plus_1 for axis in word.axes):
            raise StructuralError(
                f"Word {word} uses an axis beyond {self.X.n_plus_1}"
            )
        steps: List[Outcome] = [point]
        current = point
        for index in range(len(word) - 1, -1, -1):
            letter = word.letters[index]
            image = self.map_for(letter).apply(current)
            if isinstance(image, IndeterminatePoint):
                steps.append(IndeterminatePoint(current, letter.axis, index))
                logger.debug("Letter %s (index %s) indeterminate", letter, index)
                return steps
            steps.append(image)
            current = image
        return steps

    def evaluate(self, word: Word, point: Point) -> Outcome:
        return self.trace(word, point)[-1]


def evaluate_word(word: Word, point: Point, X: MultiQuadric, lift: str = "tau") -> Outcome:
    """Apply ``word`` to ``point``; the leftmost letter acts last."""
    return WordEvaluator(X, lift).evaluate(word, point)


def trace_word(word: Word, point: Point, X: MultiQuadric, lift: str = "tau") -> List[Outcome]:
    return WordEvaluator(X, lift).trace(word, point)


def require_prime_field(X: MultiQuadric) -> None:
    if X.field.is_rational:
        raise PreconditionError("This certificate samples points and needs F_p")


def require_generic(X: MultiQuadric) -> None:
    report = X.genericity_check()
    if not report.passed:
        raise PreconditionError(
            "Hypersurface fails the genericity proxy: " + "; ".join(report.failures)
        )
