"""Utility modules"""

from genfourier.utils.numtheory import prime_factors, sqrt_rational_parts, squarefree_split

__all__ = ["prime_factors", "sqrt_rational_parts", "squarefree_split"]
