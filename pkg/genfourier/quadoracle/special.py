"""Integrands and closed forms evaluated without cancellation near zero"""

import math

import numpy as np
from scipy.special import expit

# sin(u)/u = 1 - u²/6 + u⁴/120 - u⁶/5040 + u⁸/362880
_SINC_TAYLOR = (1.0, -1.0 / 6, 1.0 / 120, -1.0 / 5040, 1.0 / 362880)
# v/(e^v - 1) = 1 - v/2 + v²/12 - v⁴/720 + v⁶/30240
_BERNOULLI_TAYLOR = (1.0, -0.5, 1.0 / 12, 0.0, -1.0 / 720, 0.0, 1.0 / 30240)


def _poly(coeffs, x: float) -> float:
    result = 0.0
    for c in reversed(coeffs):
        result = result * x + c
    return result


def sinc(u: float, cutoff: float = 1e-3) -> float:
    if abs(u) < cutoff:
        return _poly(_SINC_TAYLOR, u * u)
    return math.sin(u) / u


def sinc_power(x: float, n: int, m: int, cutoff: float = 1e-3) -> float:
    """sinⁿx / xᵐ，n ≥ m，在 0 附近用 Taylor 展开"""
    if abs(x) < cutoff:
        return x ** (n - m) * sinc(x, cutoff) ** n
    return math.sin(x) ** n / x**m


def bose_kernel(x: float, k: float, beta: float, cutoff: float = 1e-3) -> float:
    """sin(kx)/(e^{βx}-1)，x → 0 时极限为 k/β"""
    if abs(x) < cutoff:
        return k / beta * sinc(k * x, cutoff) * _poly(_BERNOULLI_TAYLOR, beta * x)
    return math.sin(k * x) / math.expm1(beta * x)


def fermi(x: float, beta: float) -> float:
    """1/(e^{βx}+1)，大 x 不溢出"""
    return float(expit(-beta * x))


def csch(y: float) -> float:
    if y == 0:
        raise ZeroDivisionError("csch has a pole at 0")
    a = abs(y)
    # 2e^{-a}/(1-e^{-2a})
    value = 2.0 * math.exp(-a) / -math.expm1(-2.0 * a)
    return math.copysign(value, y)


def coth(y: float) -> float:
    if y == 0:
        raise ZeroDivisionError("coth has a pole at 0")
    return 1.0 / math.tanh(y)


def fd_sine_closed(beta: float, k: float, cutoff: float = 1e-3) -> float:
    """2∫_0^∞ sin(kx)/(e^{βx}+1)dx = 1/k - π/(β sinh(πk/β))"""
    y = math.pi * k / beta
    if abs(y) < cutoff:
        y2 = y * y
        return math.pi / beta * y * (1.0 / 6 - 7.0 / 360 * y2 + 31.0 / 15120 * y2 * y2)
    return 1.0 / k - math.pi / beta * csch(y)


def be_sine_closed(beta: float, k: float, cutoff: float = 1e-3) -> float:
    """2∫_0^∞ sin(kx)/(e^{βx}-1)dx = (π/β)coth(πk/β) - 1/k"""
    y = math.pi * k / beta
    if abs(y) < cutoff:
        y2 = y * y
        return math.pi / beta * y * (1.0 / 3 - y2 / 45 + 2.0 / 945 * y2 * y2)
    return math.pi / beta * coth(y) - 1.0 / k


def fd_csch_closed(beta: float, k: float) -> float:
    """π/(β sinh(πk/β))：Fermi-Dirac 像光滑部分的虚部"""
    return math.pi / beta * csch(math.pi * k / beta)


def alt_sum_terms(alpha: float, count: int) -> np.ndarray:
    n = np.arange(1, count + 1, dtype=float)
    signs = np.where(n % 2 == 0, 1.0, -1.0)
    return signs / (alpha * alpha - n * n)


def fd_partial_fraction_terms(beta: float, k: float, count: int) -> np.ndarray:
    n = np.arange(1, count + 1, dtype=float)
    signs = np.where(n % 2 == 0, 1.0, -1.0)
    return signs / (beta * beta * n * n + k * k)
