"""Closed forms for ∫ sinⁿx / xᵐ dx over the real line and the half line"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List

from tqdm import tqdm

from genfourier.core.errors import DomainError
from genfourier.core.exact import GaussPiCoeff, ExactValue, eval_float, i_power

logger = logging.getLogger(__name__)

FULL = "full"
HALF = "half"
RANGES = (FULL, HALF)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _check(n: int, m: int):
    if m < 1:
        raise DomainError(f"m must be >= 1, got m={m}")
    if n < m:
        raise DomainError(f"need n >= m >= 1, got n={n}, m={m}")


@dataclass(frozen=True)
class SincQuery:
    """积分 ∫ sinⁿx/xᵐ dx 的参数"""

    n: int
    m: int
    range: str = FULL

    def __post_init__(self):
        _check(self.n, self.m)
        if self.range not in RANGES:
            raise DomainError(f"range must be one of {RANGES}, got {self.range!r}")

    @property
    def odd_parity(self) -> bool:
        """n-m 为奇数时被积函数为奇函数"""
        return (self.n - self.m) % 2 == 1

    @property
    def is_regularized(self) -> bool:
        """半轴、m=1、n 为偶数时积分对数发散，公式给出有限部分"""
        return self.range == HALF and self.m == 1 and self.n % 2 == 0


def _real_part(c: GaussPiCoeff, what: str) -> Fraction:
    if not c.is_real:
        raise ArithmeticError(f"{what} kept an imaginary part {c.im}")
    return c.re


def full_line_coeff(n: int, m: int) -> GaussPiCoeff:
    """全实轴积分中 π 的高斯有理系数（i 幂化简前）"""
    _check(n, m)
    total = sum(
        (-1) ** l * math.comb(n, l) * (2 * l - n) ** (m - 1) * _sign(2 * l - n)
        for l in range(n + 1)
    )
    scale = Fraction(total, 2**n * math.factorial(m - 1))
    return GaussPiCoeff.of(scale) * i_power(-(n + m))


def full_line(n: int, m: int) -> ExactValue:
    """
    ∫_ℝ sinⁿx/xᵐ dx

    n-m 为奇数时被积函数为奇函数，结果为 0；否则为 π 的有理倍数
    """
    coeff = _real_part(full_line_coeff(n, m), f"full_line({n}, {m})")
    return ExactValue.from_pi(coeff)


def full_line_diag(n: int) -> ExactValue:
    """对角情形 m=n 的重排求和"""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    total = sum(
        (-1) ** l * math.comb(n, l) * (n - 2 * l) ** (n - 1)
        for l in range(n // 2 + 1)
        if 2 * l < n
    )
    return ExactValue.from_pi(Fraction(total, 2 ** (n - 1) * math.factorial(n - 1)))


def _primed_terms(n: int):
    # 省略 2l = n 的项
    for l in range(n + 1):
        if 2 * l != n:
            yield l, (-1) ** l * math.comb(n, l)


def half_line_coeff(n: int, m: int) -> Dict[int, GaussPiCoeff]:
    """
    半轴积分的高斯有理系数

    Returns:
        n-m 为偶数时为 {0: π 的系数}；否则为 {|2l-n|: ln|2l-n| 的系数}
    """
    _check(n, m)
    denominator = 2**n * math.factorial(m - 1)
    if (n - m) % 2 == 0:
        total = sum(w * (n - 2 * l) ** (m - 1) * _sign(2 * l - n) for l, w in _primed_terms(n))
        scale = -i_power(m - n) * Fraction(total, 2 * denominator)
        return {0: scale}

    prefactor = i_power(m - n + 1)
    weights: Dict[int, int] = {}
    for l, w in _primed_terms(n):
        arg = abs(2 * l - n)
        if arg == 1:
            continue
        weights[arg] = weights.get(arg, 0) + w * (n - 2 * l) ** (m - 1)
    return {arg: prefactor * Fraction(w, denominator) for arg, w in sorted(weights.items())}


def half_line(n: int, m: int) -> ExactValue:
    """
    ∫_0^∞ sinⁿx/xᵐ dx

    n-m 为偶数时为 π 的有理倍数（等于 full_line 的一半）；为奇数时为 ln p 的有理组合。
    m=1 且 n 为偶数时返回发散积分的有限部分。
    """
    coeffs = half_line_coeff(n, m)
    what = f"half_line({n}, {m})"
    if (n - m) % 2 == 0:
        return ExactValue.from_pi(_real_part(coeffs[0], what))
    logs = {arg: _real_part(c, what) for arg, c in coeffs.items()}
    return ExactValue.build(logs=logs)


def antideriv_coeff_A(m: int) -> Fraction:
    """A_{m-1}，递推 A_j = A_{j-1}/j，A_0 = 1"""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    a = Fraction(1)
    for j in range(1, m):
        a = a / j
    return a


def antideriv_coeff_B(m: int) -> Fraction:
    """B_{m-1}，递推 B_j = B_{j-1}/j + A_{j-1}/j²，B_0 = 1"""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    a, b = Fraction(1), Fraction(1)
    for j in range(1, m):
        a, b = a / j, b / j + a / (j * j)
    return b


def sinc_integral(query: SincQuery) -> ExactValue:
    if query.range == FULL and query.odd_parity:
        return ExactValue.zero()
    if query.range == FULL:
        return full_line(query.n, query.m)
    if query.is_regularized:
        logger.debug(f"half_line({query.n}, 1) is the finite part of a divergent integral")
    return half_line(query.n, query.m)


@dataclass
class SincRow:
    """积分表的一行"""

    query: SincQuery
    exact: ExactValue
    value: float


def sinc_table(max_n: int, show_progress: bool = False) -> List[SincRow]:
    """
    生成 1 ≤ m ≤ n ≤ max_n 两种区间的积分表

    Args:
        max_n: 最大的 n
        show_progress: 是否显示进度条

    Returns:
        按 (n, m, range) 排序的行
    """
    if max_n < 1:
        raise DomainError(f"max_n must be >= 1, got {max_n}")
    queries = [
        SincQuery(n, m, r)
        for n in range(1, max_n + 1)
        for m in range(1, n + 1)
        for r in RANGES
    ]
    rows = []
    for query in tqdm(queries, desc="sincint", disable=not show_progress):
        exact = sinc_integral(query)
        rows.append(SincRow(query, exact, eval_float(exact)))
    logger.info(f"Computed {len(rows)} integral table rows up to n={max_n}")
    return rows
