"""Core modules: configuration, errors, exact arithmetic"""

from genfourier.core.config import Config
from genfourier.core.exact import (
    ExactValue,
    GaussPiCoeff,
    coeff_arith,
    coeff_div,
    eval_float,
    exact_add,
    parse_exact,
    render_exact,
)

__all__ = [
    "Config",
    "ExactValue",
    "GaussPiCoeff",
    "coeff_arith",
    "coeff_div",
    "eval_float",
    "exact_add",
    "parse_exact",
    "render_exact",
]
