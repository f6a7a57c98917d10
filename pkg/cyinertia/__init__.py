# cyinertia/__init__.py
__version__ = "0.1.0"

from .algebra import Field, MPoly
from .geometry import (
    AxisDecomposition,
    FiberMap,
    IndeterminatePoint,
    MultiQuadric,
    Point,
    compose_same_axis,
    make_rho,
    make_rho_inv,
    make_sigma,
    make_tau,
    matrix_power,
    random_hypersurface,
    sample_on_x,
)
from .words import Word, parse_word, reduce_rho_free, restrict_to_x, uc_reduce
from .certify import (
    certify_inertia,
    certify_nontrivial,
    certify_off_x,
    certify_restriction,
    certify_tau_sigma_agree,
    eigen_check,
    evaluate_word,
    order_check,
    power_coefficients,
    uc_oracle_check,
)
from .models import CertifyConfig, GenerationConfig, SamplerConfig, Status, Verdict
from .utils import CYResult
from .errors import (
    CYException,
    DegenerateAxisError,
    DegenerateMapError,
    HypersurfaceFormatError,
    InvalidFieldError,
    InvalidPointError,
    PreconditionError,
    SamplingExhaustedError,
    StructuralError,
    WordParseError,
)
from .libs.hypfile import HypersurfaceFile

__all__ = [
    "__version__",
    # Algebra
    "Field",
    "MPoly",
    # Geometry
    "AxisDecomposition",
    "FiberMap",
    "IndeterminatePoint",
    "MultiQuadric",
    "Point",
    "compose_same_axis",
    "make_rho",
    "make_rho_inv",
    "make_sigma",
    "make_tau",
    "matrix_power",
    "random_hypersurface",
    "sample_on_x",
    # Words
    "Word",
    "parse_word",
    "reduce_rho_free",
    "restrict_to_x",
    "uc_reduce",
    # Certificates
    "certify_inertia",
    "certify_nontrivial",
    "certify_off_x",
    "certify_restriction",
    "certify_tau_sigma_agree",
    "eigen_check",
    "evaluate_word",
    "order_check",
    "power_coefficients",
    "uc_oracle_check",
    # Models
    "CertifyConfig",
    "GenerationConfig",
    "SamplerConfig",
    "Status",
    "Verdict",
    "CYResult",
    # Errors
    "CYException",
    "DegenerateAxisError",
    "DegenerateMapError",
    "HypersurfaceFormatError",
    "InvalidFieldError",
    "InvalidPointError",
    "PreconditionError",
    "SamplingExhaustedError",
    "StructuralError",
    "WordParseError",
    # Files
    "HypersurfaceFile",
]
