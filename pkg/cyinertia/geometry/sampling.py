# cyinertia/geometry/sampling.py
from __future__ import annotations

import itertools
import logging
import random
from typing import Optional, Sequence

from ..algebra import Field, MPoly
from ..errors import (
    GenerationExhaustedError,
    PreconditionError,
    SamplingExhaustedError,
    StructuralError,
    check_axis,
)
from ..models import GenerationConfig, SamplerConfig
from .hypersurface import MAX_EXPONENT, MultiQuadric
from .points import Point

logger = logging.getLogger(__name__)


def trial_seed(seed: int, index: int) -> int:
    """Independent, reproducible seed for trial ``index`` of a run."""
    return random.Random(f"{seed}/{index}").getrandbits(63)


def random_affine_point(field: Field, n_plus_1: int, rng: random.Random) -> Point:
    """Uniform affine point over F_p, or small integers over Q."""
    return Point.affine(field, [field.random_element(rng) for _ in range(n_plus_1)])


def sample_on_x(
    X: MultiQuadric,
    axis: int,
    seed: int,
    config: Optional[SamplerConfig] = None,
) -> Point:
    """
    Sample a point of X over F_p by solving the axis quadratic on a random fiber.

    Random affine values are drawn for the other coordinates z; fibers with
    F0(z) = 0 or a non-residue discriminant are skipped. The root is picked
    with the seeded generator.

    :raises PreconditionError: if X is not over F_p
    :raises SamplingExhaustedError: after ``config.max_attempts`` fibers
    """
    config = config or SamplerConfig()
    field = X.field
    if field.is_rational:
        raise PreconditionError("Point sampling needs a hypersurface over F_p")
    j0 = check_axis(axis, X.n_plus_1)
    decomposition = X.decompose_axis(axis)
    rng = random.Random(seed)
    two = field(2)

    for attempt in range(config.max_attempts):
        base = random_affine_point(field, X.n_plus_1, rng)
        a, b, c = decomposition.evaluate_at(base)
        if field.is_zero(a):
            continue
        root = field.sqrt(b * b - field(4) * a * c)
        if root is None:
            continue
        roots = [(-b + root) / (two * a), (-b - root) / (two * a)]
        x = roots[rng.randrange(2)]
        point = base.replace(axis, (field.one, x))
        logger.debug(
            "Sampled %s on axis %s after %s attempts", point.format(), axis, attempt + 1
        )
        return point

    logger.warning(
        "Sampling exhausted on axis %s after %s attempts", j0 + 1, config.max_attempts
    )
    raise SamplingExhaustedError(
        f"No split fiber on axis {axis} within {config.max_attempts} attempts"
    )


def random_hypersurface(
    n_plus_1: int,
    field: Field,
    seed: int,
    config: Optional[GenerationConfig] = None,
) -> MultiQuadric:
    """
    Draw all 3^{n+1} coefficients and retry until the genericity proxy passes.

    :raises GenerationExhaustedError: if no draw passes within the budget
    """
    config = config or GenerationConfig()
    if n_plus_1 < 2:
        raise StructuralError(f"Need at least two P^1 factors, got {n_plus_1}")
    rng = random.Random(seed)
    monomials: Sequence[tuple] = list(
        itertools.product(range(MAX_EXPONENT + 1), repeat=n_plus_1)
    )
    for attempt in range(config.max_attempts):
        terms = {
            monom: field.random_element(
                rng, config.coeff_bound, config.denominator_bound
            )
            for monom in monomials
        }
        poly = MPoly.from_terms(field, n_plus_1, terms, (MAX_EXPONENT,) * n_plus_1)
        if poly.is_zero:
            continue
        X = MultiQuadric(poly)
        if X.genericity_check().passed:
            logger.debug("Generated generic X after %s draws", attempt + 1)
            return X
    raise GenerationExhaustedError(
        f"No generic hypersurface within {config.max_attempts} draws"
    )
