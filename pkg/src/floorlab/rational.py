"""Exact rational arithmetic.

Python ints are already unbounded and :class:`fractions.Fraction` always
stores a reduced fraction with a positive denominator, so ``Rational`` is
simply ``Fraction``.  This module adds the handful of helpers the rest of
the package needs: checked construction, floor/ceil that never go through
floats, and the canonical ``"p/q"`` text form used by the CLI.
"""

from __future__ import annotations

import operator
import re
from fractions import Fraction
from typing import Union

from .errors import DomainError, ZeroDenominatorError

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"\A\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*\Z")

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
}


def make_rational(num: int, den: int = 1) -> Fraction:
    if den == 0:
        raise ZeroDenominatorError(f"zero denominator in {num}/{den}")
    return Fraction(int(num), int(den))


def as_rational(x: RationalLike | str) -> Fraction:
    """Coerce an int, Fraction or canonical string to a Fraction.

    Floats are rejected: they would smuggle rounding into exact code.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def rat_arith(a: RationalLike, b: RationalLike, op: str) -> Fraction:
    a = as_rational(a)
    if op == "pow_int":
        if isinstance(b, Fraction):
            if b.denominator != 1:
                raise DomainError("pow_int exponent must be an integer")
            b = b.numerator
        if b < 0:
            raise DomainError("pow_int exponent must be non-negative")
        return a ** int(b)
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(a, as_rational(b))


def floor_rat(x: RationalLike) -> int:
    x = as_rational(x)
    # floor division on ints rounds toward -inf, as required
    return x.numerator // x.denominator


def ceil_rat(x: RationalLike) -> int:
    x = as_rational(x)
    return -((-x.numerator) // x.denominator)


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r} (expected 'p/q' or 'p')")
    num, den = m.group(1), m.group(2)
    return make_rational(int(num), int(den) if den is not None else 1)


def format_rational(x: RationalLike) -> str:
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
