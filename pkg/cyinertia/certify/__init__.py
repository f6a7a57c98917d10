from .base import WordEvaluator, evaluate_word, trace_word
from .pointwise import (
    certify_inertia,
    certify_nontrivial,
    certify_off_x,
    certify_restriction,
    certify_tau_sigma_agree,
    uc_oracle_check,
)
from .symbolic import eigen_check, fiber_period, order_check, power_coefficients

__all__ = [
    "WordEvaluator",
    "evaluate_word",
    "trace_word",
    "certify_inertia",
    "certify_nontrivial",
    "certify_off_x",
    "certify_restriction",
    "certify_tau_sigma_agree",
    "uc_oracle_check",
    "eigen_check",
    "fiber_period",
    "order_check",
    "power_coefficients",
]
