"""Integer helpers: prime factoring and square-free splitting"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple, Union

from sympy import factorint


@lru_cache(maxsize=4096)
def _factor(n: int) -> Tuple[Tuple[int, int], ...]:
    return tuple(sorted(factorint(n).items()))


def prime_factors(n: int) -> Dict[int, int]:
    """
    正整数的素因子分解

    示例:
        9 -> {3: 2}
        12 -> {2: 2, 3: 1}
        1 -> {}
    """
    if n < 1:
        raise ValueError(f"prime_factors needs a positive integer, got {n}")
    return dict(_factor(n))


def squarefree_split(n: int) -> Tuple[int, int]:
    """把 n 写成 s²·r，r 无平方因子，返回 (s, r)"""
    if n < 1:
        raise ValueError(f"squarefree_split needs a positive integer, got {n}")
    outside, radicand = 1, 1
    for p, e in _factor(n):
        outside *= p ** (e // 2)
        if e % 2:
            radicand *= p
    return outside, radicand


def sqrt_rational_parts(q: Union[int, Fraction]) -> Tuple[Fraction, int]:
    """√q = c·√r，返回 (c, r)；q ≥ 0"""
    q = Fraction(q)
    if q < 0:
        raise ValueError(f"square root of negative rational {q}")
    if q == 0:
        return Fraction(0), 1
    # √(p/d) = √(p·d)/d
    outside, radicand = squarefree_split(q.numerator * q.denominator)
    return Fraction(outside, q.denominator), radicand
