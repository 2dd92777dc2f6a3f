"""Exact arithmetic: rationals, Gaussian rationals scaled by powers of √π, values in span{1, π, ln p}"""

import logging
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

import mpmath
import pyparsing as pp
from sympy import isprime

from genfourier.core.errors import AddPowerMismatch, DomainError, ParseError
from genfourier.utils.numtheory import prime_factors, sqrt_rational_parts, squarefree_split

logger = logging.getLogger(__name__)

Rational = Fraction
RationalLike = Union[int, Fraction]

DEFAULT_DPS = 40

_contexts = threading.local()


def mp_context(dps: int = DEFAULT_DPS) -> mpmath.MPContext:
    """当前线程私有的 mpmath 上下文（不改动全局 mp 精度）"""
    cache = getattr(_contexts, "by_dps", None)
    if cache is None:
        cache = _contexts.by_dps = {}
    ctx = cache.get(dps)
    if ctx is None:
        ctx = mpmath.MPContext()
        ctx.dps = dps
        cache[dps] = ctx
    return ctx


def mp_rational(ctx: mpmath.MPContext, q: Fraction):
    return ctx.mpf(q.numerator) / q.denominator


def as_rational(value: Union[RationalLike, str]) -> Fraction:
    """转换为 Fraction（拒绝浮点数，避免引入舍入误差）"""
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}: exact values need int, Fraction or 'p/q'")
    return Fraction(value)


def format_rational(q: Fraction) -> str:
    """最简分数的文本形式，分母为 1 时省略"""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """解析 'p' 或 'p/q' 形式的有理数"""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(text, 0, ["rational"]) from None


# ---------------------------------------------------------------------------
# GaussPiCoeff
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GaussPiCoeff:
    """
    精确系数 (re + im·i)·π^{pi_half_power/2}·√radicand

    规范形式: radicand 无平方因子；零值为 re=im=0, pi_half_power=0, radicand=1
    """

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)
    pi_half_power: int = 0
    radicand: int = 1

    def __post_init__(self):
        re = as_rational(self.re)
        im = as_rational(self.im)
        radicand = int(self.radicand)
        if radicand < 1:
            raise DomainError(f"radicand must be a positive integer, got {radicand}")
        outside, radicand = squarefree_split(radicand)
        re, im = re * outside, im * outside
        power = int(self.pi_half_power)
        if re == 0 and im == 0:
            power, radicand = 0, 1
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        object.__setattr__(self, "pi_half_power", power)
        object.__setattr__(self, "radicand", radicand)

    # -- 构造 --------------------------------------------------------------

    @classmethod
    def of(cls, value: RationalLike, pi_half_power: int = 0) -> "GaussPiCoeff":
        return cls(as_rational(value), Fraction(0), pi_half_power)

    @classmethod
    def gauss(cls, re: RationalLike, im: RationalLike, pi_half_power: int = 0) -> "GaussPiCoeff":
        return cls(as_rational(re), as_rational(im), pi_half_power)

    @classmethod
    def sqrt_of(cls, q: RationalLike) -> "GaussPiCoeff":
        """√q，q 为非负有理数"""
        outside, radicand = sqrt_rational_parts(q)
        return cls(outside, Fraction(0), 0, radicand)

    # -- 性质 --------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    @property
    def is_real(self) -> bool:
        return self.im == 0

    @property
    def shape(self) -> Tuple[int, int]:
        """可相加的条件: (π 半幂次, 根式) 相同"""
        return self.pi_half_power, self.radicand

    # -- 运算 --------------------------------------------------------------

    def __add__(self, other: "GaussPiCoeff") -> "GaussPiCoeff":
        other = _coerce(other)
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        if self.shape != other.shape:
            raise AddPowerMismatch(self, other)
        return GaussPiCoeff(self.re + other.re, self.im + other.im, self.pi_half_power, self.radicand)

    __radd__ = __add__

    def __neg__(self) -> "GaussPiCoeff":
        return GaussPiCoeff(-self.re, -self.im, self.pi_half_power, self.radicand)

    def __sub__(self, other: "GaussPiCoeff") -> "GaussPiCoeff":
        return self + (-_coerce(other))

    def __mul__(self, other) -> "GaussPiCoeff":
        other = _coerce(other)
        return GaussPiCoeff(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
            self.pi_half_power + other.pi_half_power,
            self.radicand * other.radicand,
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussPiCoeff":
        if self.is_zero:
            raise ZeroDivisionError("inverse of a zero coefficient")
        norm = self.re * self.re + self.im * self.im
        # 1/√r = √r / r
        return GaussPiCoeff(
            self.re / norm / self.radicand,
            -self.im / norm / self.radicand,
            -self.pi_half_power,
            self.radicand,
        )

    def __truediv__(self, other) -> "GaussPiCoeff":
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other) -> "GaussPiCoeff":
        return _coerce(other) * self.inverse()

    def to_complex(self, dps: int = DEFAULT_DPS) -> complex:
        """高精度求值后舍入为 complex"""
        ctx = mp_context(dps)
        scale = ctx.power(ctx.pi, ctx.mpf(self.pi_half_power) / 2) * ctx.sqrt(self.radicand)
        re = mp_rational(ctx, self.re) * scale
        im = mp_rational(ctx, self.im) * scale
        return complex(float(re), float(im))

    def __str__(self) -> str:
        return format_coeff(self)


def _coerce(value) -> GaussPiCoeff:
    if isinstance(value, GaussPiCoeff):
        return value
    return GaussPiCoeff.of(value)


ZERO = GaussPiCoeff()
ONE = GaussPiCoeff.of(1)
I_UNIT = GaussPiCoeff.gauss(0, 1)
PI = GaussPiCoeff.of(1, 2)


def i_power(n: int) -> GaussPiCoeff:
    """i^n，n 为任意整数"""
    return (ONE, I_UNIT, GaussPiCoeff.of(-1), GaussPiCoeff.gauss(0, -1))[n % 4]


def exp_i_quarter_pi(j: int) -> GaussPiCoeff:
    """e^{iπj/4}"""
    if j % 2 == 0:
        return i_power(j // 2)
    # e^{iπ/4} = (1+i)/2·√2
    eighth = GaussPiCoeff(Fraction(1, 2), Fraction(1, 2), 0, 2)
    return eighth * i_power((j - 1) // 2)


def gamma_coeff(alpha: RationalLike) -> GaussPiCoeff:
    """Γ(α)，α 为正整数或半整数"""
    alpha = as_rational(alpha)
    if alpha.denominator == 1:
        if alpha <= 0:
            raise DomainError(f"Gamma has a pole at {alpha}")
        return GaussPiCoeff.of(math.factorial(int(alpha) - 1))
    if alpha.denominator != 2:
        raise DomainError(f"Gamma({alpha}) is not exact: denominator must be 1 or 2")
    j = int(alpha - Fraction(1, 2))
    if j >= 0:
        value = Fraction(math.factorial(2 * j), 4**j * math.factorial(j))
    else:
        k = -j
        value = Fraction((-4) ** k * math.factorial(k), math.factorial(2 * k))
    return GaussPiCoeff.of(value, 1)


def coeff_arith(a: GaussPiCoeff, b: GaussPiCoeff, op: str) -> GaussPiCoeff:
    """系数的加法或乘法（op 为 'add' 或 'mul'）"""
    if op == "add":
        if not a.is_zero and not b.is_zero and a.pi_half_power != b.pi_half_power:
            raise AddPowerMismatch(a, b)
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown coefficient operation {op!r}")


def coeff_neg(a: GaussPiCoeff) -> GaussPiCoeff:
    return -a


def coeff_sub(a: GaussPiCoeff, b: GaussPiCoeff) -> GaussPiCoeff:
    return coeff_arith(a, coeff_neg(b), "add")


def coeff_div(a: GaussPiCoeff, b: GaussPiCoeff) -> GaussPiCoeff:
    """除法; π 幂相减，除数为零时抛 ZeroDivisionError"""
    return a * b.inverse()


def _pi_factor(half_power: int) -> str:
    if half_power == 1:
        return "√pi"
    if half_power == 2:
        return "pi"
    if half_power % 2 == 0:
        return f"pi^{half_power // 2}"
    return f"pi^({half_power}/2)"


def format_coeff(c: GaussPiCoeff) -> str:
    """
    系数的文本形式

    示例:
        π -> "pi"
        π^{-1/2} -> "1/√pi"
        -1/(2√π) -> "-1/(2*√pi)"
        iπ -> "i*pi"
    """
    if c.is_zero:
        return "0"
    num_factors = []
    den_factors = []
    if c.radicand > 1:
        num_factors.append(f"√{c.radicand}")
    if c.pi_half_power > 0:
        num_factors.append(_pi_factor(c.pi_half_power))
    elif c.pi_half_power < 0:
        den_factors.append(_pi_factor(-c.pi_half_power))

    sign = ""
    if c.im == 0:
        numerator, denominator = c.re.numerator, c.re.denominator
        if numerator < 0:
            sign, numerator = "-", -numerator
        head = [] if numerator == 1 and num_factors else [str(numerator)]
        if denominator != 1:
            den_factors.insert(0, str(denominator))
    elif c.re == 0:
        if c.im < 0:
            sign = "-"
        magnitude = abs(c.im)
        head = ["i" if magnitude == 1 else f"{format_rational(magnitude)}i"]
    else:
        im_sign = "+" if c.im > 0 else "-"
        head = [f"({format_rational(c.re)}{im_sign}{format_rational(abs(c.im))}i)"]

    text = sign + "*".join(head + num_factors)
    if den_factors:
        den = den_factors[0] if len(den_factors) == 1 else "(" + "*".join(den_factors) + ")"
        text += "/" + den
    return text


# ---------------------------------------------------------------------------
# ExactValue
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExactValue:
    """
    span{1, π} ∪ {ln p : p 素数} 上的有理线性组合

    log_terms 按素数升序保存 (p, 系数)，不含零系数
    """

    coeff_one: Fraction = Fraction(0)
    coeff_pi: Fraction = Fraction(0)
    log_terms: Tuple[Tuple[int, Fraction], ...] = ()

    def __post_init__(self):
        merged: Dict[int, Fraction] = {}
        for p, c in self.log_terms:
            p = int(p)
            if not isprime(p):
                raise DomainError(f"log argument {p} is not prime; use ExactValue.from_log")
            merged[p] = merged.get(p, Fraction(0)) + as_rational(c)
        terms = tuple((p, c) for p, c in sorted(merged.items()) if c != 0)
        object.__setattr__(self, "coeff_one", as_rational(self.coeff_one))
        object.__setattr__(self, "coeff_pi", as_rational(self.coeff_pi))
        object.__setattr__(self, "log_terms", terms)

    @classmethod
    def zero(cls) -> "ExactValue":
        return cls()

    @classmethod
    def from_rational(cls, q: RationalLike) -> "ExactValue":
        return cls(coeff_one=as_rational(q))

    @classmethod
    def from_pi(cls, q: RationalLike) -> "ExactValue":
        return cls(coeff_pi=as_rational(q))

    @classmethod
    def from_log(cls, m: int, coeff: RationalLike = 1) -> "ExactValue":
        """coeff·ln m，合数参数按素因子展开: ln m = Σ e_p ln p"""
        if m < 1:
            raise DomainError(f"ln({m}) is not a real logarithm of a positive integer")
        coeff = as_rational(coeff)
        return cls(log_terms=tuple((p, coeff * e) for p, e in prime_factors(m).items()))

    @classmethod
    def build(
        cls,
        coeff_one: RationalLike = 0,
        coeff_pi: RationalLike = 0,
        logs: Mapping[int, RationalLike] = None,
    ) -> "ExactValue":
        """由任意正整数对数参数构造（自动分解）"""
        value = cls(coeff_one=as_rational(coeff_one), coeff_pi=as_rational(coeff_pi))
        for m, c in (logs or {}).items():
            value = value + cls.from_log(m, c)
        return value

    @property
    def logs(self) -> Dict[int, Fraction]:
        return dict(self.log_terms)

    @property
    def is_zero(self) -> bool:
        return self.coeff_one == 0 and self.coeff_pi == 0 and not self.log_terms

    def __add__(self, other: "ExactValue") -> "ExactValue":
        return ExactValue(
            self.coeff_one + other.coeff_one,
            self.coeff_pi + other.coeff_pi,
            self.log_terms + other.log_terms,
        )

    def __neg__(self) -> "ExactValue":
        return self.scale(-1)

    def __sub__(self, other: "ExactValue") -> "ExactValue":
        return self + (-other)

    def scale(self, q: RationalLike) -> "ExactValue":
        q = as_rational(q)
        return ExactValue(
            self.coeff_one * q,
            self.coeff_pi * q,
            tuple((p, c * q) for p, c in self.log_terms),
        )

    def __mul__(self, q: RationalLike) -> "ExactValue":
        return self.scale(q)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return render_exact(self)


def exact_add(u: ExactValue, v: ExactValue) -> ExactValue:
    """逐分量有理加法"""
    return u + v


def _ordered_terms(v: ExactValue) -> Iterable[Tuple[Fraction, str]]:
    if v.coeff_one != 0:
        yield v.coeff_one, ""
    if v.coeff_pi != 0:
        yield v.coeff_pi, "*pi"
    for p, c in v.log_terms:
        yield c, f"*ln({p})"


def render_exact(v: ExactValue) -> str:
    """
    确定性文本形式

    顺序: 1, π, 然后 ln p（p 升序）
    示例: "-45/32*ln(3) + 125/96*ln(5)"
    """
    parts = []
    for index, (coeff, suffix) in enumerate(_ordered_terms(v)):
        if index == 0:
            parts.append(format_rational(coeff) + suffix)
        elif coeff < 0:
            parts.append(" - " + format_rational(-coeff) + suffix)
        else:
            parts.append(" + " + format_rational(coeff) + suffix)
    return "".join(parts) if parts else "0"


_UINT = pp.Word(pp.nums)
_RAT = pp.Combine(pp.Optional("-") + _UINT + pp.Optional("/" + _UINT))
_BASIS = pp.Optional(
    pp.Literal("*pi")("pi") | (pp.Suppress("*ln(") + _UINT("prime") + pp.Suppress(")"))
)
_EXACT_TERM = pp.Group(_RAT("rat") + _BASIS).set_name("term")
_EXACT_VALUE = _EXACT_TERM + pp.ZeroOrMore(pp.Group(pp.one_of("+ -")("sign") - _EXACT_TERM("term")))


def parse_exact(text: str) -> ExactValue:
    """render_exact 的逆运算"""
    try:
        tokens = _EXACT_VALUE.parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise ParseError.from_pyparsing(text, e) from None

    value = ExactValue.zero()
    for index, group in enumerate(tokens):
        if index == 0:
            sign, term = 1, group
        else:
            sign, term = (-1 if group["sign"] == "-" else 1), group["term"]
        coeff = sign * parse_rational(term["rat"])
        if "pi" in term:
            value = value + ExactValue.from_pi(coeff)
        elif "prime" in term:
            prime = int(term["prime"])
            if not isprime(prime):
                raise ParseError(text, text.find(term["prime"]), ["prime"])
            value = value + ExactValue.from_log(prime, coeff)
        else:
            value = value + ExactValue.from_rational(coeff)
    return value


def eval_float(v: ExactValue, dps: int = DEFAULT_DPS) -> float:
    """
    高精度求值后舍入为 binary64

    Raises:
        OverflowError: 结果超出 binary64 范围
    """
    ctx = mp_context(dps)
    total = mp_rational(ctx, v.coeff_one) + mp_rational(ctx, v.coeff_pi) * ctx.pi
    for p, c in v.log_terms:
        total += mp_rational(ctx, c) * ctx.log(p)
    result = float(total)
    if math.isinf(result):
        raise OverflowError(f"{render_exact(v)} exceeds the binary64 range")
    return result
