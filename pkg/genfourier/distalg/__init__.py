"""
Distribution term algebra: generalized Fourier transform tables,
integer and fractional derivatives
"""

from genfourier.distalg.evaluate import eval_pointwise
from genfourier.distalg.expr import K_SIDE, X_SIDE, DistExpr, expr_sum, render_expr
from genfourier.distalg.parser import parse_expr
from genfourier.distalg.terms import (
    BoseEinstein,
    Const,
    Coth,
    Csch,
    DeltaDeriv,
    DistTerm,
    ExpLine,
    FermiDirac,
    HalfPowerFull,
    Heaviside,
    IkPower,
    Monomial,
    NegPower,
    OneSidedPower,
    Sgn,
    SgnPower,
)
from genfourier.distalg.transform import derivative, frac_derivative, ft, ift, multiply_ik_power

__all__ = [
    "BoseEinstein",
    "Const",
    "Coth",
    "Csch",
    "DeltaDeriv",
    "DistExpr",
    "DistTerm",
    "ExpLine",
    "FermiDirac",
    "HalfPowerFull",
    "Heaviside",
    "IkPower",
    "K_SIDE",
    "Monomial",
    "NegPower",
    "OneSidedPower",
    "Sgn",
    "SgnPower",
    "X_SIDE",
    "derivative",
    "eval_pointwise",
    "expr_sum",
    "frac_derivative",
    "ft",
    "ift",
    "multiply_ik_power",
    "parse_expr",
    "render_expr",
]
