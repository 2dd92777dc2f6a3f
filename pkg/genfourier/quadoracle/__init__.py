"""Numerical verification oracle"""

from genfourier.quadoracle.acceleration import accelerated_sum, euler_accelerate
from genfourier.quadoracle.oracle import QuadOracle, QuadResult
from genfourier.quadoracle.special import be_sine_closed, fd_csch_closed, fd_sine_closed

__all__ = [
    "QuadOracle",
    "QuadResult",
    "accelerated_sum",
    "be_sine_closed",
    "euler_accelerate",
    "fd_csch_closed",
    "fd_sine_closed",
]
