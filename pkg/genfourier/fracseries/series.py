"""Fractional differentiation of 2π-periodic trigonometric series by coefficient rotation"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from genfourier.core.config import Config
from genfourier.core.errors import DomainError, UnknownName, UnsupportedAlpha
from genfourier.core.exact import ZERO, GaussPiCoeff, as_rational, exp_i_quarter_pi, mp_context, mp_rational

logger = logging.getLogger(__name__)

BUILTIN_NAMES = ("sawtooth", "absx")


def _real(c) -> GaussPiCoeff:
    c = c if isinstance(c, GaussPiCoeff) else GaussPiCoeff.of(c)
    if not c.is_real:
        raise DomainError(f"series coefficients must be real, got {c}")
    return c


@dataclass(frozen=True)
class Harmonic:
    """第 n 个谐波: a·cos(nx) + b·sin(nx)"""

    n: int
    a: GaussPiCoeff = ZERO
    b: GaussPiCoeff = ZERO

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"harmonic frequency must be >= 1, got {self.n}")
        a, b = _real(self.a), _real(self.b)
        # 旋转 a·cos + b·sin 要求两者可相加
        if not a.is_zero and not b.is_zero and a.shape != b.shape:
            raise DomainError(f"harmonic {self.n}: a and b must share the pi power and radicand, got {a} and {b}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def is_zero(self) -> bool:
        return self.a.is_zero and self.b.is_zero


@dataclass(frozen=True)
class TrigSeries:
    """
    截断三角级数 mean + Σ (a_n cos nx + b_n sin nx)，周期 2π

    harmonics 按频率严格递增，不含全零谐波
    """

    mean: GaussPiCoeff = ZERO
    harmonics: Tuple[Harmonic, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "mean", _real(self.mean))
        kept = tuple(h for h in self.harmonics if not h.is_zero)
        frequencies = [h.n for h in kept]
        if any(b <= a for a, b in zip(frequencies, frequencies[1:])):
            raise DomainError(f"harmonic frequencies must be strictly increasing, got {frequencies}")
        object.__setattr__(self, "harmonics", kept)

    @classmethod
    def from_triples(cls, mean, triples: Iterable[Tuple[int, object, object]]) -> "TrigSeries":
        return cls(_real(mean), tuple(Harmonic(n, _real(a), _real(b)) for n, a, b in triples))

    @property
    def order(self) -> int:
        """非零谐波个数"""
        return len(self.harmonics)

    def harmonic(self, n: int) -> Harmonic:
        for h in self.harmonics:
            if h.n == n:
                return h
        return Harmonic(n)


def _rotation(alpha: Fraction) -> Tuple[GaussPiCoeff, GaussPiCoeff]:
    """(cos(απ/2), sin(απ/2))"""
    unit = exp_i_quarter_pi(int(2 * alpha))
    cos = GaussPiCoeff(unit.re, 0, 0, unit.radicand)
    sin = GaussPiCoeff(unit.im, 0, 0, unit.radicand)
    return cos, sin


def _check_alpha(alpha) -> Fraction:
    alpha = as_rational(alpha)
    if alpha.denominator not in (1, 2):
        raise UnsupportedAlpha(alpha)
    if alpha < 0:
        raise DomainError(f"alpha must be >= 0, got {alpha}")
    return alpha


def frac_deriv_series(s: TrigSeries, alpha) -> TrigSeries:
    """
    逐项分数阶导数

    a'_n = n^α (a_n cos(απ/2) + b_n sin(απ/2))
    b'_n = n^α (b_n cos(απ/2) - a_n sin(απ/2))

    Args:
        s: 输入级数
        alpha: 非负阶数，分母为 1 或 2

    Returns:
        变换后的级数；α > 0 时均值项为 0
    """
    alpha = _check_alpha(alpha)
    if alpha == 0:
        return s
    cos, sin = _rotation(alpha)
    j = int(2 * alpha)
    harmonics = []
    for h in s.harmonics:
        scale = GaussPiCoeff.sqrt_of(h.n**j)
        a = scale * (h.a * cos + h.b * sin)
        b = scale * (h.b * cos - h.a * sin)
        harmonics.append(Harmonic(h.n, a, b))
    return TrigSeries(ZERO, tuple(harmonics))


def builtin_series(name: str, order: int) -> TrigSeries:
    """
    内置级数

    Args:
        name: "sawtooth"（f(x)=x）或 "absx"（g(x)=|x|）
        order: 非零谐波个数

    Raises:
        UnknownName: 未知名称
    """
    if order < 1:
        raise DomainError(f"order must be >= 1, got {order}")
    if name == "sawtooth":
        # x = 2 Σ (-1)^{n-1} sin(nx)/n
        harmonics = [Harmonic(n, ZERO, GaussPiCoeff.of(Fraction(2 * (-1) ** (n - 1), n))) for n in range(1, order + 1)]
        return TrigSeries(ZERO, tuple(harmonics))
    if name == "absx":
        # |x| = π/2 - (4/π) Σ cos((2j+1)x)/(2j+1)²
        harmonics = []
        for j in range(order):
            n = 2 * j + 1
            harmonics.append(Harmonic(n, GaussPiCoeff.of(Fraction(-4, n * n), -2), ZERO))
        return TrigSeries(GaussPiCoeff.of(Fraction(1, 2), 2), tuple(harmonics))
    raise UnknownName(f"unknown series {name!r}; choose one of {BUILTIN_NAMES}")


def _mp_value(ctx, c: GaussPiCoeff):
    if c.is_zero:
        return ctx.mpf(0)
    scale = ctx.power(ctx.pi, ctx.mpf(c.pi_half_power) / 2) * ctx.sqrt(c.radicand)
    return mp_rational(ctx, c.re) * scale


def sample_series(s: TrigSeries, xs: Sequence[float], config: Config = None) -> List[float]:
    """
    在 xs 上逐点求值（扩展精度累加）

    输出顺序与输入一致
    """
    dps = (config or Config).MP_DPS
    ctx = mp_context(dps)
    mean = _mp_value(ctx, s.mean)
    coeffs = [(h.n, _mp_value(ctx, h.a), _mp_value(ctx, h.b)) for h in s.harmonics]
    values = []
    for x in xs:
        x = ctx.mpf(float(x))
        terms = [mean]
        for n, a, b in coeffs:
            if a:
                terms.append(a * ctx.cos(n * x))
            if b:
                terms.append(b * ctx.sin(n * x))
        values.append(float(ctx.fsum(terms)))
    logger.debug(f"sampled series of order {s.order} at {len(values)} points")
    return values


def series_energy(s: TrigSeries, n: int) -> GaussPiCoeff:
    """a_n² + b_n²"""
    h = s.harmonic(n)
    return h.a * h.a + h.b * h.b
