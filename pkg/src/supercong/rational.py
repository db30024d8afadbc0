"""Exact rational helpers: rising factorials, generalized binomials, parsing.

Rationals are plain :class:`fractions.Fraction` values, which are kept in
lowest terms with a positive denominator by construction.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"`` (optional sign, no whitespace)."""
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"malformed rational {text!r}; expected a or a/b")
    if "/" in text and int(text.split("/")[1]) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(text)


def format_rational(r: Fraction) -> str:
    return str(r)


def factorial(k: int) -> int:
    if k < 0:
        raise ValueError("factorial of a negative integer")
    return math.factorial(k)


def rising_factorial(a: RationalLike, k: int) -> Fraction:
    """Pochhammer symbol (a)_k = a(a+1)...(a+k-1), with (a)_0 = 1."""
    if k < 0:
        raise ValueError("rising factorial needs k >= 0")
    a = as_rational(a)
    out = Fraction(1)
    for i in range(k):
        factor = a + i
        if factor == 0:
            return Fraction(0)
        out *= factor
    return out


def binomial_general(a: RationalLike, k: int) -> Fraction:
    """a(a-1)...(a-k+1)/k! for rational a and integer k >= 0."""
    if k < 0:
        raise ValueError("binomial needs k >= 0")
    a = as_rational(a)
    num = Fraction(1)
    for i in range(k):
        num *= a - i
        if num == 0:
            return num
    return num / math.factorial(k)
