"""Closed taxonomy of distribution primitives"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from genfourier.core.errors import DomainError
from genfourier.core.exact import as_rational, format_rational


def _half_integral(value: Fraction) -> bool:
    return value.denominator in (1, 2)


def _check_side(side: int):
    if side not in (1, -1):
        raise DomainError(f"side must be +1 or -1, got {side}")


def _paren(q: Fraction) -> str:
    return f"({format_rational(q)})"


@dataclass(frozen=True)
class DistTerm:
    """分布原语基类；子类集合是封闭的"""

    ORDER = 0
    IMAGE_ONLY = False

    @property
    def kind(self) -> str:
        return type(self).__name__

    def params(self) -> Tuple:
        return ()

    def sort_key(self) -> Tuple:
        return (self.ORDER,) + tuple(self.params())

    def render(self, var: str = "x") -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Const(DistTerm):
    """常函数 1"""

    ORDER = 0

    def render(self, var: str = "x") -> str:
        return "1"


@dataclass(frozen=True)
class Heaviside(DistTerm):
    """Θ(x)（side=+1）或 Θ(-x)（side=-1）"""

    side: int = 1
    ORDER = 1

    def __post_init__(self):
        _check_side(self.side)

    def params(self) -> Tuple:
        return (-self.side,)

    def render(self, var: str = "x") -> str:
        return "theta" if self.side == 1 else f"theta(-{var})"


@dataclass(frozen=True)
class Sgn(DistTerm):
    ORDER = 2

    def render(self, var: str = "x") -> str:
        return "sgn"


@dataclass(frozen=True)
class DeltaDeriv(DistTerm):
    """δ^{(order)}(x - shift)"""

    order: int = 0
    shift: Fraction = Fraction(0)
    ORDER = 3

    def __post_init__(self):
        if self.order < 0:
            raise DomainError(f"delta derivative order must be >= 0, got {self.order}")
        object.__setattr__(self, "shift", as_rational(self.shift))

    def params(self) -> Tuple:
        return (self.order, self.shift)

    def render(self, var: str = "x") -> str:
        text = "delta"
        if self.order:
            text += f"^({self.order})"
        if self.shift:
            text += f"@{format_rational(self.shift)}"
        return text


@dataclass(frozen=True)
class Monomial(DistTerm):
    """x^n，n ≥ 1"""

    n: int = 1
    ORDER = 4

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"Monomial needs n >= 1, got {self.n}")

    def params(self) -> Tuple:
        return (self.n,)

    def render(self, var: str = "x") -> str:
        return var if self.n == 1 else f"{var}^{self.n}"


@dataclass(frozen=True)
class NegPower(DistTerm):
    """x^{-n}（主值意义），n ≥ 1"""

    n: int = 1
    ORDER = 5

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"NegPower needs n >= 1, got {self.n}")

    def params(self) -> Tuple:
        return (self.n,)

    def render(self, var: str = "x") -> str:
        return f"{var}^-{self.n}"


@dataclass(frozen=True)
class SgnPower(DistTerm):
    """x^n·sgn(x)；n = 0 时规范化为 Sgn"""

    n: int = 1
    ORDER = 6

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"SgnPower needs n >= 0, got {self.n}")

    def params(self) -> Tuple:
        return (self.n,)

    def render(self, var: str = "x") -> str:
        base = var if self.n == 1 else f"{var}^{self.n}"
        return f"{base}*sgn"


@dataclass(frozen=True)
class OneSidedPower(DistTerm):
    """x^α·Θ(±x)，α 的分母为 1 或 2"""

    alpha: Fraction = Fraction(1, 2)
    side: int = 1
    ORDER = 7

    def __post_init__(self):
        alpha = as_rational(self.alpha)
        if not _half_integral(alpha):
            raise DomainError(f"OneSidedPower exponent must have denominator 1 or 2, got {alpha}")
        if alpha.denominator == 1 and alpha < 0:
            raise DomainError(f"OneSidedPower integer exponent must be >= 0, got {alpha}")
        _check_side(self.side)
        object.__setattr__(self, "alpha", alpha)

    @property
    def is_integral(self) -> bool:
        return self.alpha.denominator == 1

    def params(self) -> Tuple:
        return (self.alpha, -self.side)

    def render(self, var: str = "x") -> str:
        step = "theta" if self.side == 1 else f"theta(-{var})"
        return f"{var}^{_paren(self.alpha)}*{step}"


@dataclass(frozen=True)
class HalfPowerFull(DistTerm):
    """全实轴的 x^{n+1/2}（带因子 2 的对称化定义）"""

    n: int = 0
    ORDER = 8

    @property
    def alpha(self) -> Fraction:
        return self.n + Fraction(1, 2)

    def params(self) -> Tuple:
        return (self.n,)

    def render(self, var: str = "x") -> str:
        return f"{var}^{2 * self.n + 1}/2"


@dataclass(frozen=True)
class IkPower(DistTerm):
    """(i·x)^α，主分支；k 侧的像"""

    alpha: Fraction = Fraction(-1)
    ORDER = 9
    IMAGE_ONLY = True

    def __post_init__(self):
        alpha = as_rational(self.alpha)
        if not _half_integral(alpha):
            raise DomainError(f"IkPower exponent must have denominator 1 or 2, got {alpha}")
        object.__setattr__(self, "alpha", alpha)

    def params(self) -> Tuple:
        return (self.alpha,)

    def render(self, var: str = "x") -> str:
        if self.alpha == 0:
            return "1"
        return f"(i{var})^{_paren(self.alpha)}"


@dataclass(frozen=True)
class ExpLine(DistTerm):
    """e^{iax}"""

    a: Fraction = Fraction(1)
    ORDER = 10

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))

    def params(self) -> Tuple:
        return (self.a,)

    def render(self, var: str = "x") -> str:
        if self.a == 1:
            return f"exp(i{var})"
        return f"exp(i{format_rational(self.a)}{var})"


@dataclass(frozen=True)
class FermiDirac(DistTerm):
    """1/(e^{βx}+1)，化学势为 0"""

    beta: Fraction = Fraction(1)
    ORDER = 11

    def __post_init__(self):
        beta = as_rational(self.beta)
        if beta <= 0:
            raise DomainError(f"beta must be > 0, got {beta}")
        object.__setattr__(self, "beta", beta)

    def params(self) -> Tuple:
        return (self.beta,)

    def render(self, var: str = "x") -> str:
        return f"fd({format_rational(self.beta)})"


@dataclass(frozen=True)
class BoseEinstein(FermiDirac):
    """1/(e^{βx}-1)，化学势为 0"""

    ORDER = 12

    def render(self, var: str = "x") -> str:
        return f"be({format_rational(self.beta)})"


@dataclass(frozen=True)
class Csch(DistTerm):
    """1/sinh(cπx)；k 侧的像"""

    c: Fraction = Fraction(1)
    ORDER = 13
    IMAGE_ONLY = True

    def __post_init__(self):
        c = as_rational(self.c)
        if c <= 0:
            raise DomainError(f"{self.kind} scale must be > 0, got {c}")
        object.__setattr__(self, "c", c)

    def params(self) -> Tuple:
        return (self.c,)

    def _argument(self, var: str) -> str:
        if self.c == 1:
            return f"pi*{var}"
        return f"{format_rational(self.c)}*pi*{var}"

    def render(self, var: str = "x") -> str:
        return f"csch({self._argument(var)})"


@dataclass(frozen=True)
class Coth(Csch):
    """coth(cπx)；k 侧的像"""

    ORDER = 14

    def render(self, var: str = "x") -> str:
        return f"coth({self._argument(var)})"


# 规范化构造：退化参数映射到对应的基本原语


def monomial(n: int) -> DistTerm:
    return Const() if n == 0 else Monomial(n)


def sgn_power(n: int) -> DistTerm:
    return Sgn() if n == 0 else SgnPower(n)


def one_sided(alpha, side: int = 1) -> DistTerm:
    alpha = as_rational(alpha)
    return Heaviside(side) if alpha == 0 else OneSidedPower(alpha, side)


def exp_line(a) -> DistTerm:
    a = as_rational(a)
    return Const() if a == 0 else ExpLine(a)
