# cyinertia/certify/pointwise.py
from __future__ import annotations

import logging
import random
from typing import Optional

from ..errors import AlphabetError, PreconditionError, SamplingExhaustedError
from ..geometry import (
    FiberMap,
    IndeterminatePoint,
    MultiQuadric,
    Point,
    make_rho,
    make_rho_inv,
    make_sigma,
    make_tau,
    random_affine_point,
    sample_on_x,
    trial_seed,
)
from ..models import CertifyConfig, Status, Verdict, Witness
from ..words import Word, lift as lift_word, reduce_rho_free, restrict_to_x, uc_reduce
from .base import WordEvaluator, require_generic, require_prime_field

logger = logging.getLogger(__name__)


def _sample_any_axis(X: MultiQuadric, seed: int, index: int, config: CertifyConfig) -> Point:
    """On-X sample for trial ``index``, fibered over a random axis."""
    s = trial_seed(seed, index)
    axis = random.Random(s).randint(1, X.n_plus_1)
    return sample_on_x(X, axis, s, config.sampler)


def _exhausted(claim: str, seed: int, used: int, hits: int, err: SamplingExhaustedError, **kw) -> Verdict:
    logger.warning("%s: %s", claim, err.message)
    return Verdict(
        Status.INCONCLUSIVE, claim, seed, used, hits, detail=err.message, **kw
    )


def certify_inertia(
    X: MultiQuadric,
    axis: int,
    trials: Optional[int] = None,
    seed: int = 0,
    config: Optional[CertifyConfig] = None,
    rho: Optional[FiberMap] = None,
    rho_inv: Optional[FiberMap] = None,
) -> Verdict:
    """
    rho_i and rho_i^{-1} fix sampled points of X.

    ``rho`` / ``rho_inv`` replace the constructed maps (mutation tests).
    """
    config = config or CertifyConfig()
    trials = config.trials if trials is None else trials
    require_prime_field(X)
    claim = f"rho_{axis} and its inverse are in the inertia group"
    maps = (rho or make_rho(X, axis), rho_inv or make_rho_inv(X, axis))
    hits = 0
    checked = 0
    for t in range(trials):
        try:
            point = _sample_any_axis(X, seed, t, config)
        except SamplingExhaustedError as e:
            return _exhausted(claim, seed, t, hits, e, axis=axis)
        images = [m.apply(point) for m in maps]
        if any(isinstance(image, IndeterminatePoint) for image in images):
            hits += 1
            continue
        checked += 1
        for image in images:
            if not image.projectively_equal(point):
                logger.info("Inertia refuted on axis %s at trial %s", axis, t)
                return Verdict(
                    Status.REFUTED, claim, seed, t + 1, hits,
                    witness=Witness(t, point, image), axis=axis,
                    detail="a point of X is moved",
                )
    if checked == 0:
        return Verdict(
            Status.INCONCLUSIVE, claim, seed, trials, hits, axis=axis,
            detail="every sample was indeterminate",
        )
    logger.info("Inertia verified on axis %s (%s points)", axis, checked)
    return Verdict(
        Status.VERIFIED, claim, seed, trials, hits, axis=axis,
        detail=f"{checked} points of X fixed",
    )


def certify_tau_sigma_agree(
    X: MultiQuadric,
    axis: int,
    trials: Optional[int] = None,
    seed: int = 0,
    config: Optional[CertifyConfig] = None,
) -> Verdict:
    """
    tau_i and sigma_i restrict to the same covering involution on X: equal
    images on X, only the axis coordinate changes, and the point moves
    unless its fiber is a double root.
    """
    config = config or CertifyConfig()
    trials = config.trials if trials is None else trials
    require_prime_field(X)
    claim = f"tau_{axis} and sigma_{axis} agree on X"
    tau, sigma = make_tau(X, axis), make_sigma(X, axis)
    discriminant = X.discriminant_axis(axis)
    field = X.field
    hits = 0
    checked = 0
    for t in range(trials):
        try:
            point = sample_on_x(X, axis, trial_seed(seed, t), config.sampler)
        except SamplingExhaustedError as e:
            return _exhausted(claim, seed, t, hits, e, axis=axis)
        image_tau, image_sigma = tau.apply(point), sigma.apply(point)
        if isinstance(image_tau, IndeterminatePoint) or isinstance(
            image_sigma, IndeterminatePoint
        ):
            hits += 1
            continue
        checked += 1
        problem = None
        if not image_tau.projectively_equal(image_sigma):
            problem = "tau and sigma images differ"
            bad = image_sigma
        elif not (X.contains(image_tau) and X.contains(image_sigma)):
            problem = "image left X"
            bad = image_tau
        elif any(
            image_tau.coords[j] != point.coords[j]
            for j in range(X.n_plus_1)
            if j != axis - 1
        ):
            problem = "a coordinate off the axis changed"
            bad = image_tau
        elif image_tau.projectively_equal(point) and not field.is_zero(
            discriminant.evaluate_projective(point.coords)
        ):
            problem = "point fixed on a split fiber"
            bad = image_tau
        if problem:
            logger.info("tau/sigma agreement refuted on axis %s: %s", axis, problem)
            return Verdict(
                Status.REFUTED, claim, seed, t + 1, hits,
                witness=Witness(t, point, bad), axis=axis, detail=problem,
            )
    if checked == 0:
        return Verdict(
            Status.INCONCLUSIVE, claim, seed, trials, hits, axis=axis,
            detail="every sample was indeterminate",
        )
    return Verdict(
        Status.VERIFIED, claim, seed, trials, hits, axis=axis,
        detail=f"{checked} points of X swapped consistently",
    )


def certify_off_x(
    X: MultiQuadric,
    axis: int,
    trials: Optional[int] = None,
    seed: int = 0,
    config: Optional[CertifyConfig] = None,
) -> Verdict:
    """rho_i and rho_i^{-1} send sampled points off X to points off X."""
    config = config or CertifyConfig()
    trials = config.trials if trials is None else trials
    claim = f"rho_{axis} and its inverse preserve the complement of X"
    maps = (make_rho(X, axis), make_rho_inv(X, axis))
    hits = 0
    checked = 0
    for t in range(trials):
        point = random_affine_point(X.field, X.n_plus_1, random.Random(trial_seed(seed, t)))
        if X.contains(point):
            continue
        for m in maps:
            image = m.apply(point)
            if isinstance(image, IndeterminatePoint):
                hits += 1
                continue
            checked += 1
            if X.contains(image):
                return Verdict(
                    Status.REFUTED, claim, seed, t + 1, hits,
                    witness=Witness(t, point, image), axis=axis,
                    detail="a point off X was mapped onto X",
                )
    if checked == 0:
        return Verdict(
            Status.INCONCLUSIVE, claim, seed, trials, hits, axis=axis,
            detail="no usable sample off X",
        )
    return Verdict(
        Status.VERIFIED, claim, seed, trials, hits, axis=axis,
        detail=f"{checked} images stayed off X",
    )


def certify_nontrivial(
    word: Word,
    X: MultiQuadric,
    trials: Optional[int] = None,
    seed: int = 0,
    config: Optional[CertifyConfig] = None,
) -> Verdict:
    """
    Search a point p off X with w(p) != p.

    The first two candidates put the axis of the leftmost letter at 0 and
    at infinity; the rest are random affine points.

    :raises PreconditionError: if w freely reduces to the empty word or X
        fails the genericity proxy
    """
    config = config or CertifyConfig()
    trials = config.trials if trials is None else trials
    reduced = reduce_rho_free(word)
    if not reduced:
        raise PreconditionError(f"Word {word!s} reduces to the identity")
    require_generic(X)
    claim = f"{reduced} is not the identity"
    field = X.field
    first_axis = reduced.letters[0].axis
    evaluator = WordEvaluator(X)
    hits = 0
    for t in range(trials):
        point = random_affine_point(field, X.n_plus_1, random.Random(trial_seed(seed, t)))
        if t == 0:
            point = point.replace(first_axis, (field.one, field.zero))
        elif t == 1:
            point = point.replace(first_axis, (field.zero, field.one))
        if X.contains(point):
            continue
        image = evaluator.evaluate(reduced, point)
        if isinstance(image, IndeterminatePoint):
            hits += 1
            continue
        if not image.projectively_equal(point):
            logger.info("Nontriviality of %s witnessed at trial %s", reduced, t)
            return Verdict(
                Status.VERIFIED, claim, seed, t + 1, hits,
                witness=Witness(t, point, image), word=str(reduced),
                detail="the word moves the witness point",
            )
    return Verdict(
        Status.INCONCLUSIVE, claim, seed, trials, hits, word=str(reduced),
        detail="no moved point found",
    )


def uc_oracle_check(
    word: Word,
    X: MultiQuadric,
    trials: Optional[int] = None,
    seed: int = 0,
    config: Optional[CertifyConfig] = None,
) -> Verdict:
    """
    The action of an iota-word on sampled points of X matches its reduced
    form in the universal Coxeter group: trivial iff every sample is fixed.
    """
    config = config or CertifyConfig()
    trials = config.trials if trials is None else trials
    if word.restricted is False:
        raise AlphabetError(f"{word} is not an iota-word")
    require_prime_field(X)
    require_generic(X)
    reduced = uc_reduce(word)
    trivial = not reduced
    claim = f"{word or 'empty word'} acts on X as its reduced form {reduced or 'identity'}"
    evaluator = WordEvaluator(X, lift=config.lift)
    ambient = lift_word(word, config.lift)
    hits = 0
    checked = 0
    for t in range(trials):
        try:
            point = _sample_any_axis(X, seed, t, config)
        except SamplingExhaustedError as e:
            return _exhausted(claim, seed, t, hits, e, word=str(word))
        image = evaluator.evaluate(ambient, point)
        if isinstance(image, IndeterminatePoint):
            hits += 1
            continue
        checked += 1
        moved = not image.projectively_equal(point)
        if moved and trivial:
            return Verdict(
                Status.REFUTED, claim, seed, t + 1, hits,
                witness=Witness(t, point, image), word=str(word),
                detail="a reduced-empty word moved a point",
            )
        if moved:
            return Verdict(
                Status.VERIFIED, claim, seed, t + 1, hits,
                witness=Witness(t, point, image), word=str(word),
                detail="nontrivial reduced word moves a point",
            )
    if checked == 0:
        return Verdict(
            Status.INCONCLUSIVE, claim, seed, trials, hits, word=str(word),
            detail="every sample was indeterminate",
        )
    if trivial:
        return Verdict(
            Status.VERIFIED, claim, seed, trials, hits, word=str(word),
            detail=f"{checked} points fixed",
        )
    return Verdict(
        Status.REFUTED, claim, seed, trials, hits, word=str(word),
        detail=f"nontrivial reduced word fixed all {checked} points",
    )


def certify_restriction(
    word: Word,
    X: MultiQuadric,
    trials: Optional[int] = None,
    seed: int = 0,
    config: Optional[CertifyConfig] = None,
) -> Verdict:
    """An ambient word and the lift of its restriction agree on X."""
    config = config or CertifyConfig()
    trials = config.trials if trials is None else trials
    if word.restricted:
        raise AlphabetError(f"{word} is not an ambient word")
    require_prime_field(X)
    restricted = lift_word(restrict_to_x(word), config.lift)
    claim = f"{word or 'empty word'} restricts to {restricted or 'identity'} on X"
    evaluator = WordEvaluator(X, lift=config.lift)
    hits = 0
    checked = 0
    for t in range(trials):
        try:
            point = _sample_any_axis(X, seed, t, config)
        except SamplingExhaustedError as e:
            return _exhausted(claim, seed, t, hits, e, word=str(word))
        image = evaluator.evaluate(word, point)
        expected = evaluator.evaluate(restricted, point)
        if isinstance(image, IndeterminatePoint) or isinstance(
            expected, IndeterminatePoint
        ):
            hits += 1
            continue
        checked += 1
        if not image.projectively_equal(expected):
            return Verdict(
                Status.REFUTED, claim, seed, t + 1, hits,
                witness=Witness(t, point, image), word=str(word),
                detail=f"restricted word gives {expected.format()}",
            )
    if checked == 0:
        return Verdict(
            Status.INCONCLUSIVE, claim, seed, trials, hits, word=str(word),
            detail="every sample was indeterminate",
        )
    return Verdict(
        Status.VERIFIED, claim, seed, trials, hits, word=str(word),
        detail=f"{checked} points agree",
    )
