"""Numeric evaluation of function-like terms (bridge to the quadrature oracle)"""

import logging

from genfourier.core.config import Config
from genfourier.core.errors import SingularPoint, UnsupportedTerm
from genfourier.core.exact import GaussPiCoeff, mp_context, mp_rational
from genfourier.distalg.expr import DistExpr
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

logger = logging.getLogger(__name__)


def _coeff_value(ctx, c: GaussPiCoeff):
    scale = ctx.power(ctx.pi, ctx.mpf(c.pi_half_power) / 2) * ctx.sqrt(c.radicand)
    return ctx.mpc(mp_rational(ctx, c.re) * scale, mp_rational(ctx, c.im) * scale)


def _pole(term: DistTerm, t: float):
    raise SingularPoint(term.kind, t)


def _term_value(ctx, term: DistTerm, t: float):
    x = ctx.mpf(t)
    if isinstance(term, Const):
        return ctx.mpf(1)
    if isinstance(term, Heaviside):
        if x == 0:
            return ctx.mpf(1) / 2
        return ctx.mpf(1) if term.side * x > 0 else ctx.mpf(0)
    if isinstance(term, Sgn):
        return ctx.sign(x)
    if isinstance(term, Monomial):
        return x**term.n
    if isinstance(term, NegPower):
        if x == 0:
            _pole(term, t)
        return x ** (-term.n)
    if isinstance(term, SgnPower):
        return abs(x) ** term.n * ctx.sign(x)
    if isinstance(term, OneSidedPower):
        if x == 0:
            if term.alpha < 0:
                _pole(term, t)
            return ctx.mpf(0)
        if term.side * x < 0:
            return ctx.mpf(0)
        return ctx.power(x, mp_rational(ctx, term.alpha))
    if isinstance(term, HalfPowerFull):
        # 与变换表一致: 2·x^{n+1/2}Θ(x)
        if x == 0 and term.alpha < 0:
            _pole(term, t)
        return 2 * ctx.power(x, mp_rational(ctx, term.alpha)) if x > 0 else ctx.mpf(0)
    if isinstance(term, IkPower):
        beta = term.alpha
        if beta == 0:
            return ctx.mpf(1)
        if x == 0:
            if beta < 0:
                _pole(term, t)
            return ctx.mpf(0)
        phase = ctx.expjpi(mp_rational(ctx, beta) / 2 * ctx.sign(x))
        return ctx.power(abs(x), mp_rational(ctx, beta)) * phase
    if isinstance(term, ExpLine):
        return ctx.expj(mp_rational(ctx, term.a) * x)
    if isinstance(term, BoseEinstein):
        if x == 0:
            _pole(term, t)
        return 1 / ctx.expm1(mp_rational(ctx, term.beta) * x)
    if isinstance(term, FermiDirac):
        return 1 / (ctx.exp(mp_rational(ctx, term.beta) * x) + 1)
    if isinstance(term, Coth):
        if x == 0:
            _pole(term, t)
        return ctx.coth(mp_rational(ctx, term.c) * ctx.pi * x)
    if isinstance(term, Csch):
        if x == 0:
            _pole(term, t)
        return ctx.csch(mp_rational(ctx, term.c) * ctx.pi * x)
    raise UnsupportedTerm(term.kind, "no pointwise value")


def eval_pointwise(e: DistExpr, t: float, exclude_singular: bool = False, config: Config = None) -> complex:
    """
    在 t 处数值求值

    Args:
        e: 表达式（x 侧或 k 侧）
        t: 求值点
        exclude_singular: 为 True 时跳过 δ 类项

    Returns:
        complex 结果

    Raises:
        SingularPoint: t 为极点，或未跳过的 δ 项恰好位于 t
    """
    dps = (config or Config).MP_DPS
    ctx = mp_context(dps)
    total = ctx.mpc(0)
    for coeff, term in e.terms:
        if isinstance(term, DeltaDeriv):
            if exclude_singular:
                continue
            if ctx.mpf(t) == mp_rational(ctx, term.shift):
                _pole(term, t)
            continue
        total += _coeff_value(ctx, coeff) * _term_value(ctx, term, t)
    return complex(total)
