# cyinertia/certify/symbolic.py
from __future__ import annotations

import logging
import random
from typing import Iterator, List, Optional, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.rings import PolyElement

from ..errors import DegenerateAxisError
from ..geometry import (
    MultiQuadric,
    Point,
    make_rho,
    random_affine_point,
    trial_seed,
)
from ..libs.number_theory import NumberTheoryHelper
from ..models import CertifyConfig, FiberPeriodReport, Status, Verdict
from .base import require_prime_field

logger = logging.getLogger(__name__)


def order_check(
    X: MultiQuadric,
    axis: int,
    k_max: Optional[int] = None,
    config: Optional[CertifyConfig] = None,
) -> Verdict:
    """
    rho_i^k is not a polynomial multiple of the identity for k = 1..k_max.

    Uses rho^k = p_k rho + q_k I with p_1 = 1, q_1 = 0 and
    p_{k+1} = tr(rho) p_k + q_k, q_{k+1} = -det(rho) p_k. Since rho itself
    is not scalar, rho^k is scalar exactly when p_k = 0, with scalar q_k.

    :raises DegenerateAxisError: if the axis discriminant vanishes
        identically, where the criterion does not apply
    """
    config = config or CertifyConfig()
    k_max = config.k_max if k_max is None else k_max
    if X.discriminant_axis(axis).is_zero:
        raise DegenerateAxisError(
            f"Discriminant of axis {axis} vanishes identically; "
            "the infinite-order criterion needs it nonzero"
        )
    claim = f"rho_{axis} has infinite order"
    make_rho(X, axis)  # raises when F0 or F2 vanishes
    for k, p_k, q_k in power_coefficients(X, axis, k_max):
        logger.debug("rho_%s^%s: p_k has %s terms", axis, k, len(p_k))
        if not p_k:
            logger.info("rho_%s^%s is scalar", axis, k)
            return Verdict(
                Status.REFUTED, claim, trials_used=k, axis=axis, offending_k=k,
                detail=f"rho_{axis}^{k} is a scalar matrix",
            )
    return Verdict(
        Status.VERIFIED, claim, trials_used=k_max, axis=axis,
        detail=f"rho_{axis}^k is not scalar for 1 <= k <= {k_max}",
    )


def power_coefficients(
    X: MultiQuadric, axis: int, k_max: int
) -> Iterator[Tuple[int, PolyElement, PolyElement]]:
    """
    Yield (k, p_k, q_k) with rho_i^k = p_k rho_i + q_k I for k = 1..k_max.

    Over F_p the recurrence runs in a ZZ ring reduced mod p after every step
    (symmetric residues); over Q it runs in the field's own ring.
    """
    F0, F1, F2 = X.decompose_axis(axis).parts
    trace, det = (-F1).poly, (F0 * F2).poly
    if X.field.is_rational:
        ring = trace.ring

        def reduce_mod(f: PolyElement) -> PolyElement:
            return f

    else:
        p = X.field.characteristic
        ring = trace.ring.clone(domain=ZZ)
        trace, det = (
            ring.from_dict({m: int(c) for m, c in f.items()}) for f in (trace, det)
        )

        def reduce_mod(f: PolyElement) -> PolyElement:
            return f.trunc_ground(p)

    p_k, q_k = ring.one, ring.zero
    for k in range(1, k_max + 1):
        if k > 1:
            p_k, q_k = reduce_mod(trace * p_k + q_k), reduce_mod(-det * p_k)
        yield k, p_k, q_k


def fiber_period(X: MultiQuadric, axis: int, point: Point) -> Optional[int]:
    """
    Period of rho_i on the fiber through ``point`` over F_p.

    At z the matrix (0, F2; -F0, -F1) has eigenvalues (-F1 +- sqrt(Delta))/2;
    the period is the multiplicative order of their ratio. None when F0 F2,
    Delta vanish at z or Delta is not a square.
    """
    require_prime_field(X)
    field = X.field
    a, b, c = X.decompose_axis(axis).evaluate_at(point)
    if field.is_zero(a * c):
        return None
    delta = b * b - field(4) * a * c
    if field.is_zero(delta):
        return None
    root = field.sqrt(delta)
    if root is None:
        return None
    two = field(2)
    ratio = ((-b + root) / two) / ((-b - root) / two)
    return NumberTheoryHelper.multiplicative_order(
        field.residue(ratio), field.characteristic
    )


def eigen_check(
    X: MultiQuadric,
    axis: int,
    k_max: Optional[int] = None,
    trials: Optional[int] = None,
    seed: int = 0,
    config: Optional[CertifyConfig] = None,
) -> FiberPeriodReport:
    """Fiber periods of rho_i at random affine fibers."""
    config = config or CertifyConfig()
    k_max = config.k_max if k_max is None else k_max
    trials = config.trials if trials is None else trials
    require_prime_field(X)
    periods: List[int] = []
    skipped = 0
    for t in range(trials):
        point = random_affine_point(X.field, X.n_plus_1, random.Random(trial_seed(seed, t)))
        period = fiber_period(X, axis, point)
        if period is None:
            skipped += 1
        else:
            periods.append(period)
    return FiberPeriodReport(axis, k_max, tuple(periods), skipped)
