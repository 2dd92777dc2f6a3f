"""
Table-driven generalized Fourier transform, its inverse, and derivatives

Convention: F[f](k) = ∫ f(x) e^{-ikx} dx, inverse with 1/(2π).
"""

import logging
import math
from fractions import Fraction
from typing import List

from genfourier.core.errors import (
    DomainError,
    NonInvertibleCombination,
    UnsupportedAlpha,
    UnsupportedFractionalOperand,
    UnsupportedTerm,
)
from genfourier.core.exact import (
    ONE,
    PI,
    GaussPiCoeff,
    as_rational,
    exp_i_quarter_pi,
    gamma_coeff,
    i_power,
)
from genfourier.distalg.expr import K_SIDE, X_SIDE, DistExpr, Pair, expr_sum
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
    monomial,
    one_sided,
    sgn_power,
)

logger = logging.getLogger(__name__)

_TWO_PI = GaussPiCoeff.of(2, 2)


def _fact(n: int) -> GaussPiCoeff:
    return GaussPiCoeff.of(math.factorial(n))


def _require(e: DistExpr, domain: str, op: str):
    if e.domain != domain:
        raise DomainError(f"{op} expects a {domain}-side expression, got {e.domain}-side")


# ---------------------------------------------------------------------------
# x -> k
# ---------------------------------------------------------------------------


def _ft_term(term: DistTerm) -> List[Pair]:
    if isinstance(term, Const):
        return [(_TWO_PI, DeltaDeriv(0))]
    if isinstance(term, Heaviside):
        return [(PI, DeltaDeriv(0)), (GaussPiCoeff.of(term.side), IkPower(-1))]
    if isinstance(term, Sgn):
        return [(GaussPiCoeff.of(2), IkPower(-1))]
    if isinstance(term, DeltaDeriv):
        if term.shift:
            raise UnsupportedTerm(term.kind, f"shifted delta at {term.shift} has no table image")
        return [(ONE, IkPower(term.order))]
    if isinstance(term, Monomial):
        return [(_TWO_PI * i_power(term.n), DeltaDeriv(term.n))]
    if isinstance(term, NegPower):
        n = term.n
        return [(PI / (i_power(n) * _fact(n - 1)), sgn_power(n - 1))]
    if isinstance(term, SgnPower):
        return [(2 * _fact(term.n), IkPower(-term.n - 1))]
    if isinstance(term, OneSidedPower):
        if term.is_integral:
            n = int(term.alpha)
            return [
                (i_power(n) * PI, DeltaDeriv(n)),
                (_fact(n) * term.side, IkPower(-n - 1)),
            ]
        if term.side != 1:
            raise UnsupportedTerm(term.kind, "half-integer power on the negative axis")
        return [(gamma_coeff(term.alpha + 1), IkPower(-term.alpha - 1))]
    if isinstance(term, HalfPowerFull):
        alpha = term.alpha
        return [(2 * gamma_coeff(alpha + 1), IkPower(-alpha - 1))]
    if isinstance(term, ExpLine):
        return [(_TWO_PI, DeltaDeriv(0, term.a))]
    if isinstance(term, BoseEinstein):
        beta = term.beta
        return [
            (PI / GaussPiCoeff.gauss(0, beta), Coth(1 / beta)),
            (-PI, DeltaDeriv(0)),
        ]
    if isinstance(term, FermiDirac):
        beta = term.beta
        return [
            (PI, DeltaDeriv(0)),
            (GaussPiCoeff.gauss(0, 1 / beta, 2), Csch(1 / beta)),
        ]
    raise UnsupportedTerm(term.kind, "image-side kind has no x -> k entry")


def ft(e: DistExpr) -> DistExpr:
    """
    广义 Fourier 变换（逐项查表）

    Args:
        e: x 侧表达式

    Returns:
        k 侧表达式
    """
    _require(e, X_SIDE, "ft")
    pairs: List[Pair] = []
    for coeff, term in e.terms:
        pairs.extend((coeff * c, t) for c, t in _ft_term(term))
    return DistExpr(K_SIDE, tuple(pairs))


# ---------------------------------------------------------------------------
# k -> x
# ---------------------------------------------------------------------------


def _ift_term(term: DistTerm) -> List[Pair]:
    if isinstance(term, IkPower):
        beta = term.alpha
        if beta.denominator == 2:
            return [(gamma_coeff(-beta).inverse(), one_sided(-beta - 1, 1))]
        if beta >= 0:
            return [(ONE, DeltaDeriv(int(beta)))]
        n = int(-beta) - 1
        return [((2 * _fact(n)).inverse(), sgn_power(n))]
    if isinstance(term, (Sgn, SgnPower)):
        j = 0 if isinstance(term, Sgn) else term.n
        return [(i_power(j + 1) * _fact(j) / PI, NegPower(j + 1))]
    if isinstance(term, DeltaDeriv):
        if term.shift == 0:
            n = term.order
            return [((_TWO_PI * i_power(n)).inverse(), monomial(n))]
        if term.order == 0:
            return [(_TWO_PI.inverse(), ExpLine(term.shift))]
        raise NonInvertibleCombination(
            f"delta^({term.order}) shifted to {term.shift} is not the image of any table entry"
        )
    if isinstance(term, Coth):
        beta = 1 / term.c
        scale = GaussPiCoeff.gauss(0, beta) / PI
        return [(scale, BoseEinstein(beta)), (scale / 2, Const())]
    if isinstance(term, Csch):
        beta = 1 / term.c
        scale = GaussPiCoeff.of(beta) / (PI * GaussPiCoeff.gauss(0, 1))
        return [(scale, FermiDirac(beta)), (-scale / 2, Const())]
    raise UnsupportedTerm(term.kind, "x-side kind has no k -> x entry")


def ift(e: DistExpr) -> DistExpr:
    """
    逆变换（1/(2π) 约定）

    Raises:
        UnsupportedTerm: 项不属于像侧分类
        NonInvertibleCombination: 项不在变换表的像中
    """
    _require(e, K_SIDE, "ift")
    pairs: List[Pair] = []
    for coeff, term in e.terms:
        pairs.extend((coeff * c, t) for c, t in _ift_term(term))
    return DistExpr(X_SIDE, tuple(pairs))


# ---------------------------------------------------------------------------
# 整数阶导数
# ---------------------------------------------------------------------------


def _derive_term(term: DistTerm) -> List[Pair]:
    if isinstance(term, Const):
        return []
    if isinstance(term, Heaviside):
        return [(GaussPiCoeff.of(term.side), DeltaDeriv(0))]
    if isinstance(term, Sgn):
        return [(GaussPiCoeff.of(2), DeltaDeriv(0))]
    if isinstance(term, DeltaDeriv):
        return [(ONE, DeltaDeriv(term.order + 1, term.shift))]
    if isinstance(term, Monomial):
        return [(GaussPiCoeff.of(term.n), monomial(term.n - 1))]
    if isinstance(term, NegPower):
        return [(GaussPiCoeff.of(-term.n), NegPower(term.n + 1))]
    if isinstance(term, SgnPower):
        return [(GaussPiCoeff.of(term.n), sgn_power(term.n - 1))]
    if isinstance(term, OneSidedPower):
        # 有限部分意义下的幂法则，不产生边界 δ
        return [(GaussPiCoeff.of(term.alpha), one_sided(term.alpha - 1, term.side))]
    if isinstance(term, HalfPowerFull):
        return [(GaussPiCoeff.of(term.alpha), HalfPowerFull(term.n - 1))]
    if isinstance(term, ExpLine):
        return [(GaussPiCoeff.gauss(0, term.a), term)]
    if isinstance(term, IkPower):
        return [(GaussPiCoeff.gauss(0, term.alpha), IkPower(term.alpha - 1))]
    raise UnsupportedTerm(term.kind, "derivative leaves the taxonomy")


def derivative(e: DistExpr, m: int = 1) -> DistExpr:
    """
    m 阶形式导数（逐项改写，迭代 m 次）
    """
    if m < 1:
        raise DomainError(f"derivative order must be >= 1, got {m}")
    for _ in range(m):
        pairs: List[Pair] = []
        for coeff, term in e.terms:
            pairs.extend((coeff * c, t) for c, t in _derive_term(term))
        e = DistExpr(e.domain, tuple(pairs))
    return e


# ---------------------------------------------------------------------------
# 分数阶导数
# ---------------------------------------------------------------------------

_FRACTIONAL_KINDS = (Const, Heaviside, DeltaDeriv, ExpLine, OneSidedPower)


def ik_power_of_shift(a: Fraction, alpha: Fraction) -> GaussPiCoeff:
    """(ia)^α = |a|^α·e^{iπα·sgn(a)/2}，主分支"""
    a = as_rational(a)
    j = int(2 * alpha)
    sign = 1 if a > 0 else -1
    return GaussPiCoeff.sqrt_of(abs(a) ** j) * exp_i_quarter_pi(j * sign)


def _multiply_term(coeff: GaussPiCoeff, term: DistTerm, alpha: Fraction) -> List[Pair]:
    integral = alpha.denominator == 1
    if isinstance(term, DeltaDeriv):
        if term.shift == 0:
            n = term.order
            if not integral:
                if n == 0:
                    return []
                raise UnsupportedFractionalOperand(term.kind, alpha)
            m = int(alpha)
            if m > n:
                return []
            # k^m δ^{(n)} = (-1)^m n!/(n-m)! δ^{(n-m)}
            scale = i_power(m) * ((-1) ** m * math.factorial(n) // math.factorial(n - m))
            return [(coeff * scale, DeltaDeriv(n - m))]
        if term.order == 0:
            return [(coeff * ik_power_of_shift(term.shift, alpha), term)]
        raise UnsupportedFractionalOperand(term.kind, alpha)
    if isinstance(term, IkPower):
        beta = term.alpha + alpha
        pairs = [(coeff, IkPower(beta))]
        if not integral and term.alpha.denominator == 2 and beta < 0 and beta.denominator == 1:
            # 因果边界值 (ik+0)^{-n-1} = (ik)^{-n-1} + iⁿπ/n!·δ^{(n)}
            n = int(-beta) - 1
            pairs.append((coeff * i_power(n) * PI / _fact(n), DeltaDeriv(n)))
        return pairs
    if isinstance(term, (Sgn, SgnPower)):
        if not integral:
            raise UnsupportedFractionalOperand(term.kind, alpha)
        n = 0 if isinstance(term, Sgn) else term.n
        m = int(alpha)
        return [(coeff * i_power(m), sgn_power(n + m))]
    if isinstance(term, Csch):
        raise UnsupportedFractionalOperand(term.kind, alpha)
    raise UnsupportedTerm(term.kind, "not an image-side kind")


def multiply_ik_power(e: DistExpr, alpha) -> DistExpr:
    """k 侧表达式乘以 (ik)^α"""
    _require(e, K_SIDE, "multiply_ik_power")
    alpha = as_rational(alpha)
    pairs: List[Pair] = []
    for coeff, term in e.terms:
        pairs.extend(_multiply_term(coeff, term, alpha))
    return DistExpr(K_SIDE, tuple(pairs))


def _fourier_exact(term: DistTerm) -> bool:
    """逆变换能精确还原的项"""
    if isinstance(term, DeltaDeriv):
        return term.shift == 0
    if isinstance(term, OneSidedPower):
        return term.is_integral or term.side == 1
    return isinstance(term, (Const, Heaviside, Sgn, Monomial, NegPower, SgnPower, ExpLine))


def _causal_image(term: DistTerm, alpha: Fraction) -> List[Pair]:
    """
    半整数阶路线所用的像

    xⁿΘ(x) 的像 iⁿπδ⁽ⁿ⁾ + n!(ik)^{-n-1} 合起来就是边界值 n!(ik+0)^{-n-1}，
    乘以 (ik)^α 后直接取 n!(ik)^{α-n-1}。
    """
    if isinstance(term, OneSidedPower) and term.is_integral:
        if term.side != 1:
            raise UnsupportedFractionalOperand(term.kind, alpha)
        n = int(term.alpha)
        return [(_fact(n), IkPower(-n - 1))]
    try:
        return _ft_term(term)
    except UnsupportedTerm as exc:
        raise UnsupportedFractionalOperand(exc.kind, alpha) from None


def _check_alpha(alpha) -> Fraction:
    alpha = as_rational(alpha)
    if alpha.denominator not in (1, 2):
        raise UnsupportedAlpha(alpha)
    if alpha <= 0:
        raise DomainError(f"fractional order must be > 0, got {alpha}")
    return alpha


def frac_derivative(e: DistExpr, alpha) -> DistExpr:
    """
    分数阶导数: ift((ik)^α · ft(e))

    Args:
        e: x 侧表达式
        alpha: 阶数，分母为 1 或 2 的正有理数

    Returns:
        x 侧表达式；整数阶与 derivative() 精确一致
    """
    _require(e, X_SIDE, "frac_derivative")
    alpha = _check_alpha(alpha)
    logger.debug(f"frac_derivative order {alpha} of {len(e)} terms")

    if alpha.denominator == 1:
        parts = []
        for coeff, term in e.terms:
            single = DistExpr.of(term, coeff)
            if _fourier_exact(term):
                parts.append(ift(multiply_ik_power(ft(single), alpha)))
            else:
                parts.append(derivative(single, int(alpha)))
        return expr_sum(X_SIDE, parts)

    pairs: List[Pair] = []
    for coeff, term in e.terms:
        if not isinstance(term, _FRACTIONAL_KINDS):
            raise UnsupportedFractionalOperand(term.kind, alpha)
        image = [(coeff * c, t) for c, t in _causal_image(term, alpha)]
        try:
            for c, t in image:
                pairs.extend(_multiply_term(c, t, alpha))
        except UnsupportedFractionalOperand:
            # 报告用户给出的项，而不是它的像
            raise UnsupportedFractionalOperand(term.kind, alpha) from None
    return ift(DistExpr(K_SIDE, tuple(pairs)))
