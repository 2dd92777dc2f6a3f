"""
Expression grammar for distribution expressions

    expr := signed_term (("+"|"-") term)*
    term := ["-"] (coef ["*" prim] | prim)
    coef := head ("*" factor)* ["/" den]
    head := rat | [rat] "i" | "(" rat ("+"|"-") [rat] "i" ")"

x-side primitives: 1, theta, theta(-x), sgn, delta[^(n)][@a], x, x^n, x^-n,
x^n*sgn, x^(a)*theta, x^(a)*theta(-x), x^m/2, exp(i[a]x), fd(b), be(b).
k-side primitives: 1, sgn, delta..., k, k^n, k^-n, k^n*sgn, (ik)^(a),
csch([c*]pi*k), coth([c*]pi*k).
"""

import logging
from fractions import Fraction
from functools import lru_cache

import pyparsing as pp

from genfourier.core.errors import DomainError, ParseError
from genfourier.core.exact import ONE, PI, GaussPiCoeff
from genfourier.distalg.expr import DOMAINS, X_SIDE, DistExpr
from genfourier.distalg.terms import (
    BoseEinstein,
    Const,
    Coth,
    Csch,
    DeltaDeriv,
    FermiDirac,
    HalfPowerFull,
    Heaviside,
    IkPower,
    NegPower,
    Sgn,
    SgnPower,
    exp_line,
    monomial,
    one_sided,
)

logger = logging.getLogger(__name__)

L = pp.Literal
S = pp.Suppress

_UINT = pp.Word(pp.nums)
_URAT = pp.Combine(_UINT + pp.Optional("/" + _UINT)).set_parse_action(lambda t: Fraction(t[0]))
_RAT = pp.Combine(pp.Optional("-") + _UINT + pp.Optional("/" + _UINT)).set_parse_action(
    lambda t: Fraction(t[0])
)
_SINT = pp.Combine(pp.Optional("-") + _UINT).set_parse_action(lambda t: int(t[0]))
_NAT = _UINT.copy().set_parse_action(lambda t: int(t[0]))


def _product(tokens) -> GaussPiCoeff:
    result = ONE
    for factor in tokens:
        result = result * factor
    return result


# -- 系数 -------------------------------------------------------------------

_PI_FACTOR = (
    L("√pi").set_parse_action(lambda: GaussPiCoeff.of(1, 1))
    | (S("pi^(") + _SINT + S("/2)")).set_parse_action(lambda t: GaussPiCoeff.of(1, t[0]))
    | (S("pi^") + _NAT).set_parse_action(lambda t: GaussPiCoeff.of(1, 2 * t[0]))
    | L("pi").set_parse_action(lambda: PI)
)
_ROOT_FACTOR = (S("√") + _NAT).set_parse_action(lambda t: GaussPiCoeff.sqrt_of(t[0]))
_FACTOR = _PI_FACTOR | _ROOT_FACTOR

_GAUSS = (S("(") + _RAT + pp.one_of("+ -") + pp.Optional(_URAT, default=Fraction(1)) + S("i)")).set_parse_action(
    lambda t: GaussPiCoeff.gauss(t[0], t[2] if t[1] == "+" else -t[2])
)
_IMAG = (pp.Optional(_URAT, default=Fraction(1)) + S("i")).set_parse_action(
    lambda t: GaussPiCoeff.gauss(0, t[0])
)
_REAL = _URAT.copy().add_parse_action(lambda t: GaussPiCoeff.of(t[0]))
_HEAD = _GAUSS | _IMAG | _REAL

_NUMERATOR = (_HEAD + pp.ZeroOrMore(S("*") + _FACTOR)) | (_FACTOR + pp.ZeroOrMore(S("*") + _FACTOR))
_DEN_ATOM = _NAT.copy().add_parse_action(lambda t: GaussPiCoeff.of(t[0])) | _FACTOR
_DENOMINATOR = _DEN_ATOM | (S("(") + _DEN_ATOM + pp.ZeroOrMore(S("*") + _DEN_ATOM) + S(")"))

_COEF = (
    _NUMERATOR.copy().set_parse_action(_product)("num")
    + pp.Optional(S("/") + _DENOMINATOR.copy().set_parse_action(_product)("den"))
).set_parse_action(lambda t: t["num"] / t["den"] if "den" in t else t["num"])


# -- 原语 -------------------------------------------------------------------


def _delta(tokens):
    order = tokens.get("order", 0)
    shift = tokens.get("shift", Fraction(0))
    return DeltaDeriv(order, shift)


def _power(tokens):
    n = tokens["n"]
    tail = tokens.get("tail")
    if tail == "*sgn":
        if n < 0:
            raise pp.ParseException("", 0, "non-negative exponent before *sgn")
        return SgnPower(n) if n else Sgn()
    if tail == "/2":
        if n % 2 == 0:
            raise pp.ParseException("", 0, "odd numerator before /2")
        return HalfPowerFull((n - 1) // 2)
    return monomial(n) if n >= 0 else NegPower(-n)


def _scaled(kind):
    def action(tokens):
        return kind(tokens.get("c", Fraction(1)))

    return action


def _common_prims():
    delta = (
        S("delta")
        + pp.Optional(S("^(") + _NAT("order") + S(")"))
        + pp.Optional(S("@") + _RAT("shift"))
    ).set_parse_action(_delta)
    return [
        L("sgn").set_parse_action(lambda: Sgn()),
        delta,
        L("1").set_parse_action(lambda: Const()),
    ]


def _power_prim(var: str):
    tail = pp.Optional((L("/2") | L("*sgn"))("tail"))
    powered = (S(f"{var}^") + _SINT("n") + tail).set_parse_action(_power)
    bare = (S(var) + pp.Optional(L("*sgn")("tail"))).set_parse_action(
        lambda t: SgnPower(1) if t.get("tail") else monomial(1)
    )
    return powered, bare


@lru_cache(maxsize=None)
def _grammar(domain: str) -> pp.ParserElement:
    var = domain
    powered, bare = _power_prim(var)
    if domain == X_SIDE:
        one_sided_prim = (
            S("x^(")
            + _RAT("alpha")
            + S(")*")
            + (L("theta(-x)") | L("theta"))("step")
        ).set_parse_action(lambda t: one_sided(t["alpha"], -1 if t["step"] == "theta(-x)" else 1))
        specific = [
            L("theta(-x)").set_parse_action(lambda: Heaviside(-1)),
            L("theta").set_parse_action(lambda: Heaviside(1)),
            one_sided_prim,
            (S("exp(i") + pp.Optional(_RAT, default=Fraction(1)) + S("x)")).set_parse_action(
                lambda t: exp_line(t[0])
            ),
            (S("fd(") + _URAT + S(")")).set_parse_action(lambda t: FermiDirac(t[0])),
            (S("be(") + _URAT + S(")")).set_parse_action(lambda t: BoseEinstein(t[0])),
        ]
    else:
        scale = pp.Optional(_URAT("c") + S("*"))
        specific = [
            (S("(ik)^(") + _RAT + S(")")).set_parse_action(lambda t: IkPower(t[0])),
            (S("csch(") + scale + S("pi*k)")).set_parse_action(_scaled(Csch)),
            (S("coth(") + scale + S("pi*k)")).set_parse_action(_scaled(Coth)),
        ]
    prim = pp.MatchFirst(specific + [powered, bare] + _common_prims())

    def make_term(tokens):
        negative = False
        coeff, term = ONE, Const()
        for item in tokens:
            if isinstance(item, str):
                negative = item == "-"
            elif isinstance(item, GaussPiCoeff):
                coeff = item
            else:
                term = item
        return ((-coeff if negative else coeff), term)

    body = ((_COEF + pp.Optional(S("*") + prim)) | prim).set_name("term")
    term = (pp.Optional(L("-")) + body).set_parse_action(make_term)
    # 运算符之后必须是一项，不再回溯
    return term + pp.ZeroOrMore(pp.one_of("+ -").set_name("operator") - term)


def parse_expr(text: str, domain: str = X_SIDE) -> DistExpr:
    """
    解析表达式文本为规范 DistExpr

    Args:
        text: 表达式文本
        domain: "x" 或 "k"

    Raises:
        ParseError: 文本不符合文法
    """
    if domain not in DOMAINS:
        raise DomainError(f"domain must be one of {DOMAINS}, got {domain!r}")
    try:
        tokens = _grammar(domain).parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise ParseError.from_pyparsing(text, e) from None

    pairs = [tokens[0]]
    for sign, (coeff, term) in zip(tokens[1::2], tokens[2::2]):
        pairs.append((-coeff if sign == "-" else coeff, term))
    logger.debug(f"parsed {len(pairs)} terms from {text!r}")
    return DistExpr(domain, tuple(pairs))
