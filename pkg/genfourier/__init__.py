"""genfourier - 广义函数的 Fourier 变换、分数阶导数与 sinc 幂积分"""

from genfourier.core.config import Config
from genfourier.core.exact import ExactValue, GaussPiCoeff
from genfourier.distalg import DistExpr, frac_derivative, ft, ift, parse_expr, render_expr
from genfourier.fracseries import TrigSeries, builtin_series, frac_deriv_series
from genfourier.quadoracle import QuadOracle
from genfourier.sincint import full_line, half_line

__version__ = "1.0.0"
__all__ = [
    "Config",
    "DistExpr",
    "ExactValue",
    "GaussPiCoeff",
    "QuadOracle",
    "TrigSeries",
    "builtin_series",
    "frac_deriv_series",
    "frac_derivative",
    "ft",
    "full_line",
    "half_line",
    "ift",
    "parse_expr",
    "render_expr",
]
