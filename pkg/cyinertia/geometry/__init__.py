from .points import IndeterminatePoint, Point
from .hypersurface import AxisDecomposition, MultiQuadric
from .sampling import random_affine_point, random_hypersurface, sample_on_x, trial_seed
from .fibermaps import (
    FiberMap,
    compose_same_axis,
    in_indeterminacy_union,
    is_scalar_identity,
    make_rho,
    make_rho_inv,
    make_sigma,
    make_tau,
    matrix_power,
)

__all__ = [
    "Point",
    "IndeterminatePoint",
    "AxisDecomposition",
    "MultiQuadric",
    "random_affine_point",
    "random_hypersurface",
    "sample_on_x",
    "trial_seed",
    "FiberMap",
    "compose_same_axis",
    "in_indeterminacy_union",
    "is_scalar_identity",
    "make_rho",
    "make_rho_inv",
    "make_sigma",
    "make_tau",
    "matrix_power",
]
