"""Random x-side expressions for the round-trip and linearity property checks"""

import random
from fractions import Fraction
from typing import Callable, List

from genfourier.core.exact import GaussPiCoeff
from genfourier.distalg.expr import X_SIDE, DistExpr, expr_sum
from genfourier.distalg.terms import (
    BoseEinstein,
    Const,
    DeltaDeriv,
    DistTerm,
    ExpLine,
    FermiDirac,
    Heaviside,
    Monomial,
    NegPower,
    OneSidedPower,
    Sgn,
    SgnPower,
)

_HALF_INTEGER_POWERS = [Fraction(k, 2) for k in (-5, -3, -1, 1, 3, 5)]
_BETAS = [Fraction(1, 2), Fraction(1), Fraction(2), Fraction(10)]


def _small_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-6, 6), rng.randint(1, 4))


def _random_coeff(rng: random.Random) -> GaussPiCoeff:
    re, im = _small_rational(rng), _small_rational(rng)
    if re == 0 and im == 0:
        re = Fraction(1)
    return GaussPiCoeff.gauss(re, im, rng.choice((0, 0, 1, 2, -2)))


# 只包含 ift(ft(e)) = e 成立的原语（HalfPowerFull 与平移的 δ 不在其中）
_TERM_FACTORIES: List[Callable[[random.Random], DistTerm]] = [
    lambda rng: Const(),
    lambda rng: Heaviside(rng.choice((1, -1))),
    lambda rng: Sgn(),
    lambda rng: DeltaDeriv(rng.randint(0, 4)),
    lambda rng: Monomial(rng.randint(1, 5)),
    lambda rng: NegPower(rng.randint(1, 5)),
    lambda rng: SgnPower(rng.randint(1, 5)),
    lambda rng: OneSidedPower(Fraction(rng.randint(1, 5)), rng.choice((1, -1))),
    lambda rng: OneSidedPower(rng.choice(_HALF_INTEGER_POWERS), 1),
    lambda rng: ExpLine(Fraction(rng.choice((-3, -2, -1, 1, 2, 3)), rng.randint(1, 3))),
    lambda rng: FermiDirac(rng.choice(_BETAS)),
    lambda rng: BoseEinstein(rng.choice(_BETAS)),
]


def random_term(rng: random.Random) -> DistTerm:
    return rng.choice(_TERM_FACTORIES)(rng)


def random_expr(rng: random.Random, max_terms: int = 3) -> DistExpr:
    """1 到 max_terms 项的随机 x 侧表达式，系数为小高斯有理数乘以 π 的半整数幂"""
    parts = [
        DistExpr.of(random_term(rng), _random_coeff(rng), X_SIDE)
        for _ in range(rng.randint(1, max_terms))
    ]
    return expr_sum(X_SIDE, parts)
