"""
Numerical oracle for the closed forms

Oscillatory integrals are cut at multiples of π; every panel is integrated
with scipy's adaptive Gauss-Kronrod rule (QUADPACK).
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np
from scipy import integrate
from scipy.special import gamma

from genfourier.core.config import Config
from genfourier.core.errors import DomainError, NoConvergence, UnknownName
from genfourier.quadoracle.acceleration import accelerated_sum, euler_accelerate
from genfourier.quadoracle.special import (
    alt_sum_terms,
    bose_kernel,
    fd_partial_fraction_terms,
    fermi,
    sinc_power,
)

logger = logging.getLogger(__name__)

FULL = "full"
HALF = "half"
MIN_TOL = 1e-12
EULER_GAMMA = 0.57721566490153286061


@dataclass
class QuadResult:
    """数值积分结果"""

    value: complex
    abs_err_estimate: float
    converged: bool
    evaluations: int = 0


def _quad(f: Callable[[float], float], a: float, b: float, **kwargs) -> Tuple[float, float, int]:
    """scipy quad，返回 (值, 误差估计, 函数求值次数)"""
    out = integrate.quad(f, a, b, full_output=1, **kwargs)
    value, err, info = out[0], out[1], out[2]
    if len(out) > 3:
        logger.debug(f"quad on [{a}, {b}]: {out[3]}")
    return value, err, int(info.get("neval", 0)) if isinstance(info, dict) else 0


class QuadOracle:
    """闭式结果的数值验证器"""

    def __init__(self, config: Optional[Config] = None):
        self.config = config or Config()
        self.evaluations = 0
        self._call_start = 0

    # -- 预算 --------------------------------------------------------------

    def _begin(self) -> int:
        """开始一次调用；预算按单次调用计"""
        self._call_start = self.evaluations
        return self._call_start

    def _spend(self, count: int, what: str):
        self.evaluations += count
        spent = self.evaluations - self._call_start
        if spent > self.config.EVAL_BUDGET:
            raise NoConvergence(spent, what)

    def _panel(self, f, a: float, b: float, tol: float, what: str) -> Tuple[float, float]:
        value, err, neval = _quad(f, a, b, epsabs=tol, epsrel=1e-13, limit=200)
        self._spend(neval, what)
        return value, err

    # -- sinc 幂积分 ---------------------------------------------------------

    def _alternating(self, f, tol: float, what: str) -> Tuple[float, float]:
        """n 为奇数: 各半周期面板符号交替，Euler 加速"""
        depth = self.config.EULER_DEPTH
        block = depth + 1
        panel_tol = tol * 1e-3
        sums: List[float] = []
        total, quad_err = 0.0, 0.0
        previous = None
        j = 0
        while True:
            for _ in range(block):
                value, err = self._panel(f, j * math.pi, (j + 1) * math.pi, panel_tol, what)
                total += value
                quad_err += err
                sums.append(total)
                j += 1
            estimate = euler_accelerate(sums, depth)
            if previous is not None:
                delta = abs(estimate - previous)
                if delta < tol / 4:
                    logger.debug(f"{what}: {j} panels, delta={delta:.3e}")
                    return estimate, delta + quad_err
            previous = estimate

    def _mean_tail(self, f, mean: float, m: int, tol: float, what: str) -> Tuple[float, float]:
        """n 为偶数、m ≥ 2: 直接求和，尾部用均值解析补齐"""
        panel_tol = tol * 1e-3
        total, quad_err = 0.0, 0.0
        j = 0
        while True:
            value, err = self._panel(f, j * math.pi, (j + 1) * math.pi, panel_tol, what)
            total += value
            quad_err += err
            j += 1
            t = j * math.pi
            bound = 2.0 * m * t ** (-m - 1)
            if bound < tol / 2:
                tail = mean * t ** (1 - m) / (m - 1)
                logger.debug(f"{what}: {j} panels, tail={tail:.3e}")
                return total + tail, bound + quad_err

    def _finite_part(self, n: int, mean: float, tol: float, what: str) -> Tuple[float, float]:
        """n 为偶数、m = 1: ∫_0^1 sinⁿx/x + ∫_1^∞ (sinⁿx - c̄)/x - c̄γ"""
        cutoff = self.config.TAYLOR_CUTOFF
        panel_tol = tol * 1e-3
        head, quad_err = self._panel(lambda x: sinc_power(x, n, 1, cutoff), 0.0, 1.0, panel_tol, what)

        def centred(x):
            return (math.sin(x) ** n - mean) / x

        # sinⁿx - c̄ = Σ a_j cos(2jx)，尾部 ∫_T^∞ ≈ Σ a_j/(4j²T²)，T 为 π 的倍数
        half = n // 2
        tail_weight = sum((-1) ** j * math.comb(n, half - j) / 2 ** (n - 1) / (4 * j * j) for j in range(1, half + 1))

        total, err = self._panel(centred, 1.0, math.pi, panel_tol, what)
        quad_err += err
        j = 1
        while True:
            value, err = self._panel(centred, j * math.pi, (j + 1) * math.pi, panel_tol, what)
            total += value
            quad_err += err
            j += 1
            t = j * math.pi
            bound = 1.0 / (4 * t**3)
            if bound < tol / 2:
                tail = tail_weight / t**2
                return head + total + tail - mean * EULER_GAMMA, bound + quad_err

    def integrate_sinc_power(self, n: int, m: int, range: str = HALF, tol: Optional[float] = None) -> QuadResult:
        """
        数值计算 ∫ sinⁿx/xᵐ dx

        Args:
            n: 正弦的幂次
            m: 分母的幂次，n ≥ m ≥ 1
            range: "half" 为 [0,∞)，"full" 为整个实轴
            tol: 绝对误差容限

        Returns:
            QuadResult

        Raises:
            NoConvergence: 超出函数求值预算
        """
        tol = self.config.DEFAULT_TOL if tol is None else tol
        if not 1 <= m <= n:
            raise DomainError(f"need n >= m >= 1, got n={n}, m={m}")
        if tol < MIN_TOL:
            raise DomainError(f"tolerance {tol} is below {MIN_TOL}")
        if range not in (FULL, HALF):
            raise DomainError(f"range must be 'full' or 'half', got {range!r}")
        if range == FULL and (n - m) % 2 == 1:
            return QuadResult(0.0, 0.0, True, 0)

        start = self._begin()
        what = f"sinc power n={n} m={m}"
        half_tol = tol / 2 if range == FULL else tol
        cutoff = self.config.TAYLOR_CUTOFF

        def f(x):
            return sinc_power(x, n, m, cutoff)

        mean = math.comb(n, n // 2) / 2**n
        if n % 2 == 1:
            value, err = self._alternating(f, half_tol, what)
        elif m >= 2:
            value, err = self._mean_tail(f, mean, m, half_tol, what)
        else:
            value, err = self._finite_part(n, mean, half_tol, what)

        if range == FULL:
            value, err = 2 * value, 2 * err
        return QuadResult(value, err, err <= tol, self.evaluations - start)

    # -- 量子统计函数的正弦变换 ------------------------------------------------

    def fd_sine_transform(self, beta: float, k: float, tol: Optional[float] = None) -> QuadResult:
        """2∫_0^∞ sin(kx)/(e^{βx}+1) dx（QAWF Fourier 权重）"""
        tol = self.config.DEFAULT_TOL if tol is None else tol
        if beta <= 0 or k <= 0:
            raise DomainError(f"need beta > 0 and k > 0, got beta={beta}, k={k}")
        start = self._begin()
        value, err, neval = _quad(lambda x: fermi(x, beta), 0.0, np.inf, weight="sin", wvar=k, epsabs=tol / 2)
        self._spend(neval, "fd sine transform")
        return QuadResult(2 * value, 2 * err, 2 * err <= tol, self.evaluations - start)

    def be_sine_transform(self, beta: float, k: float, tol: Optional[float] = None) -> QuadResult:
        """2∫_0^∞ sin(kx)/(e^{βx}-1) dx，x → 0 处用级数消除可去奇点"""
        tol = self.config.DEFAULT_TOL if tol is None else tol
        if beta <= 0 or k <= 0:
            raise DomainError(f"need beta > 0 and k > 0, got beta={beta}, k={k}")
        start = self._begin()
        cutoff = self.config.TAYLOR_CUTOFF
        # 截断处 2∫_X^∞ e^{-βx}(1+…) dx ≈ 2e^{-βX}/β < tol/4
        upper = math.log(8.0 / (beta * tol)) / beta
        period = 2 * math.pi / k
        edges = np.arange(0.0, upper + period, period)
        total, quad_err = 0.0, 0.0
        for a, b in zip(edges[:-1], edges[1:]):
            value, err = self._panel(lambda x: bose_kernel(x, k, beta, cutoff), a, b, tol * 1e-3, "be sine transform")
            total += value
            quad_err += err
        err = 2 * quad_err + tol / 4
        return QuadResult(2 * total, err, err <= tol, self.evaluations - start)

    # -- 级数恒等式 ------------------------------------------------------------

    def alt_sum(self, alpha: float, count: int, accelerate: bool = True) -> float:
        """Σ_{n=1}^N (-1)ⁿ/(α²-n²)"""
        if float(alpha).is_integer():
            raise DomainError(f"alpha must not be an integer, got {alpha}")
        if count < 1:
            raise DomainError(f"count must be >= 1, got {count}")
        terms = alt_sum_terms(alpha, count)
        if not accelerate:
            return float(terms.sum())
        return accelerated_sum(terms, self.config.EULER_DEPTH)

    @staticmethod
    def alt_sum_closed(alpha: float) -> float:
        """(π/sin(απ) - 1/α)/(2α)"""
        if float(alpha).is_integer():
            raise DomainError(f"alpha must not be an integer, got {alpha}")
        return (math.pi / math.sin(alpha * math.pi) - 1.0 / alpha) / (2 * alpha)

    def fd_partial_fraction(self, beta: float, k: float, count: int) -> complex:
        """i/k + 2ik Σ_{n=1}^N (-1)ⁿ/(β²n²+k²)，收敛到 iπ/(β sinh(πk/β))"""
        if k == 0:
            raise DomainError("k must be nonzero")
        if count < 1:
            raise DomainError(f"count must be >= 1, got {count}")
        terms = fd_partial_fraction_terms(beta, k, count)
        series = accelerated_sum(terms, self.config.EULER_DEPTH)
        return complex(0.0, 1.0 / k + 2 * k * series)

    # -- Riemann-Liouville 半阶导数 ---------------------------------------------

    def _rl_half_integral(self, x: float, tol: float) -> float:
        # (1/Γ(1/2)) ∫_0^x (x-t)^{-1/2} dt，代数权重
        value, _, neval = _quad(lambda t: 1.0, 0.0, x, weight="alg", wvar=(0.0, -0.5), epsabs=tol)
        self._spend(neval, "Riemann-Liouville integral")
        return value / gamma(0.5)

    def rl_half_derivative(self, f: str, x: float, tol: Optional[float] = None) -> QuadResult:
        """
        ∂^{1/2}f(x) = d/dx I^{1/2}f(x)，中心差分 h = x·1e-5

        目前只支持 f = "heaviside"
        """
        tol = 1e-6 if tol is None else tol
        if f != "heaviside":
            raise UnknownName(f"no Riemann-Liouville oracle for {f!r}")
        if x <= 0:
            raise DomainError(f"x must be > 0, got {x}")
        start = self._begin()
        h = x * 1e-5
        inner_tol = 1e-14
        upper = self._rl_half_integral(x + h, inner_tol)
        lower = self._rl_half_integral(x - h, inner_tol)
        value = (upper - lower) / (2 * h)
        # 截断误差 ~ h²|f'''|/6，舍入误差 ~ ε/h
        err = h * h * abs(value) / x**2 + inner_tol / h
        return QuadResult(value, err, err <= tol, self.evaluations - start)
