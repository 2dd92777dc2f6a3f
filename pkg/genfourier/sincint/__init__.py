"""Exact sinc-power integrals"""

from genfourier.sincint.formulas import (
    FULL,
    HALF,
    SincQuery,
    SincRow,
    antideriv_coeff_A,
    antideriv_coeff_B,
    full_line,
    full_line_diag,
    half_line,
    sinc_integral,
    sinc_table,
)

__all__ = [
    "FULL",
    "HALF",
    "SincQuery",
    "SincRow",
    "antideriv_coeff_A",
    "antideriv_coeff_B",
    "full_line",
    "full_line_diag",
    "half_line",
    "sinc_integral",
    "sinc_table",
]
