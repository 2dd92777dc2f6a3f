"""
Canonical linear combinations of distribution primitives

Like terms are merged by (primitive, π-power, radicand). On the x-side the
integer-power family is rewritten through the basis {xⁿ, xⁿ·sgn} and refolded
into one-sided form, so every expression has a single canonical shape.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple, Union

from genfourier.core.errors import DomainError
from genfourier.core.exact import ONE, ZERO, GaussPiCoeff, i_power
from genfourier.distalg.terms import (
    Const,
    DistTerm,
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

X_SIDE = "x"
K_SIDE = "k"
DOMAINS = (X_SIDE, K_SIDE)

Pair = Tuple[GaussPiCoeff, DistTerm]
Scalar = Union[GaussPiCoeff, int]

_HALF = GaussPiCoeff.of(Fraction(1, 2))


def _as_coeff(value) -> GaussPiCoeff:
    return value if isinstance(value, GaussPiCoeff) else GaussPiCoeff.of(value)


def _k_side_normal(coeff: GaussPiCoeff, term: DistTerm) -> Pair:
    # k 侧整数幂统一写成 (ik)^β
    if isinstance(term, Const):
        return coeff, IkPower(0)
    if isinstance(term, Monomial):
        return coeff * i_power(-term.n), IkPower(term.n)
    if isinstance(term, NegPower):
        return coeff * i_power(term.n), IkPower(-term.n)
    return coeff, term


def _x_side_basis(coeff: GaussPiCoeff, term: DistTerm) -> List[Pair]:
    # Θ(±x)·xⁿ = (xⁿ ± xⁿ·sgn)/2
    if isinstance(term, Heaviside):
        half = coeff * _HALF
        return [(half, Const()), (half * term.side, Sgn())]
    if isinstance(term, OneSidedPower) and term.is_integral:
        n = int(term.alpha)
        half = coeff * _HALF
        return [(half, monomial(n)), (half * term.side, sgn_power(n))]
    return [(coeff, term)]


def _basis_slot(term: DistTerm):
    """(n, 是否含 sgn)；非基元返回 None"""
    if isinstance(term, Const):
        return 0, False
    if isinstance(term, Monomial):
        return term.n, False
    if isinstance(term, Sgn):
        return 0, True
    if isinstance(term, SgnPower):
        return term.n, True
    return None


def _refold(acc: Dict[Tuple[DistTerm, Tuple[int, int]], GaussPiCoeff]):
    slots: Dict[Tuple[int, Tuple[int, int]], List[GaussPiCoeff]] = {}
    for (term, shape), coeff in list(acc.items()):
        slot = _basis_slot(term)
        if slot is None:
            continue
        n, odd = slot
        pair = slots.setdefault((n, shape), [ZERO, ZERO])
        pair[1 if odd else 0] = coeff
        del acc[(term, shape)]

    for (n, shape), (even, odd) in slots.items():
        if even.is_zero or odd.is_zero:
            if not even.is_zero:
                acc[(monomial(n), shape)] = even
            if not odd.is_zero:
                acc[(sgn_power(n), shape)] = odd
            continue
        for side, coeff in ((1, even + odd), (-1, even - odd)):
            if not coeff.is_zero:
                acc[(one_sided(n, side), coeff.shape)] = coeff


def _canonical(domain: str, pairs: Iterable[Pair]) -> Tuple[Pair, ...]:
    acc: Dict[Tuple[DistTerm, Tuple[int, int]], GaussPiCoeff] = {}
    for coeff, term in pairs:
        coeff = _as_coeff(coeff)
        if domain == K_SIDE:
            expanded = [_k_side_normal(coeff, term)]
        else:
            expanded = _x_side_basis(coeff, term)
        for c, t in expanded:
            if c.is_zero:
                continue
            key = (t, c.shape)
            merged = acc.get(key, ZERO) + c
            if merged.is_zero:
                acc.pop(key, None)
            else:
                acc[key] = merged

    if domain == X_SIDE:
        _refold(acc)

    ordered = sorted(acc.items(), key=lambda item: (item[0][0].sort_key(), item[0][1]))
    return tuple((coeff, term) for (term, _), coeff in ordered)


@dataclass(frozen=True)
class DistExpr:
    """
    分布原语的有限线性组合

    Attributes:
        domain: "x"（原像侧）或 "k"（像侧）
        terms: 规范化后的 (系数, 原语) 元组
    """

    domain: str
    terms: Tuple[Pair, ...] = ()

    def __post_init__(self):
        if self.domain not in DOMAINS:
            raise DomainError(f"domain must be one of {DOMAINS}, got {self.domain!r}")
        object.__setattr__(self, "terms", _canonical(self.domain, self.terms))

    @classmethod
    def of(cls, term: DistTerm, coeff: Scalar = ONE, domain: str = X_SIDE) -> "DistExpr":
        return cls(domain, ((_as_coeff(coeff), term),))

    @classmethod
    def zero(cls, domain: str = X_SIDE) -> "DistExpr":
        return cls(domain, ())

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def _check_domain(self, other: "DistExpr"):
        if self.domain != other.domain:
            raise DomainError(f"cannot combine {self.domain}-side and {other.domain}-side expressions")

    def __add__(self, other: "DistExpr") -> "DistExpr":
        self._check_domain(other)
        return DistExpr(self.domain, self.terms + other.terms)

    def __neg__(self) -> "DistExpr":
        return self.scale(-1)

    def __sub__(self, other: "DistExpr") -> "DistExpr":
        return self + (-other)

    def scale(self, factor: Scalar) -> "DistExpr":
        factor = _as_coeff(factor)
        return DistExpr(self.domain, tuple((factor * c, t) for c, t in self.terms))

    def __mul__(self, factor: Scalar) -> "DistExpr":
        return self.scale(factor)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return render_expr(self)


def expr_sum(domain: str, parts: Iterable[DistExpr]) -> DistExpr:
    pairs: List[Pair] = []
    for part in parts:
        if part.domain != domain:
            raise DomainError(f"expected a {domain}-side expression, got {part.domain}-side")
        pairs.extend(part.terms)
    return DistExpr(domain, tuple(pairs))


def _is_negative(coeff: GaussPiCoeff) -> bool:
    if coeff.re != 0 and coeff.im != 0:
        return False
    return coeff.re < 0 or (coeff.re == 0 and coeff.im < 0)


def _has_top_level_star(text: str) -> bool:
    depth = 0
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "*" and depth == 0:
            return True
    return False


def _render_term(coeff: GaussPiCoeff, term: DistTerm, var: str) -> str:
    primitive = term.render(var)
    text = str(coeff)
    if primitive == "1":
        return text
    if text == "1":
        return primitive
    if text == "-1":
        return "-" + primitive
    # 原语自身含乘号时用空格隔开系数
    separator = " * " if _has_top_level_star(primitive) else "*"
    return text + separator + primitive


def render_expr(e: DistExpr) -> str:
    """
    按表达式文法输出

    示例:
        πδ(k) + (ik)^{-1} -> "pi*delta + (ik)^(-1)"
    """
    if e.is_zero:
        return "0"
    parts = []
    for index, (coeff, term) in enumerate(e.terms):
        if index and _is_negative(coeff):
            parts.append(" - " + _render_term(-coeff, term, e.domain))
        elif index:
            parts.append(" + " + _render_term(coeff, term, e.domain))
        else:
            parts.append(_render_term(coeff, term, e.domain))
    return "".join(parts)
