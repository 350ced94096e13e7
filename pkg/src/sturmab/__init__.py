"""Sturmian words, their factor/interval bijection and abelian repetitions."""

from .exact import PHI, SQRT5, QuadraticNumber, approx_decimal, format_value, parse_value
from .words import FIBONACCI_SLOPE, SturmianParams, fibonacci_word, sturmian_prefix

__version__ = "0.1.0"

__all__ = [
    "PHI",
    "SQRT5",
    "FIBONACCI_SLOPE",
    "QuadraticNumber",
    "SturmianParams",
    "approx_decimal",
    "fibonacci_word",
    "format_value",
    "parse_value",
    "sturmian_prefix",
]
