"""Evaluation and one-sided limits of f_{n,m}(x) = floor(x^m * floor(x^m * ...)).

All three quantities share the same shape, a depth-n recurrence started
from 1:

    value:  t_j = floor(x^m * t_{j-1})
    right:  R_j = floor(d^m * R_{j-1})
    left:   L_j = ceil(d^m * L_{j-1}) - 1

The left rule is uniform: just left of d the inner function is constant at
L_{j-1} and x^m * L_{j-1} rises strictly towards d^m * L_{j-1}, so the floor
settles at the largest integer strictly below that product.  When L_{j-1}
is 0 the product is 0 and the rule gives -1; that case is handled
separately because the product is then identically zero, not increasing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .rational import RationalLike, as_rational, ceil_rat, floor_rat


@dataclass(frozen=True)
class EvalQuery:
    x: Fraction
    n: int
    m: int = 1

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        _check_domain(self.x, self.n, self.m)


@dataclass(frozen=True)
class SidedLimits:
    left: int
    right: int

    @property
    def jump(self) -> int:
        return self.right - self.left

    @property
    def is_jump(self) -> bool:
        return self.left != self.right


def _check_domain(x: Fraction, n: int, m: int) -> None:
    if x <= 0:
        raise DomainError(f"x must be positive, got {x}")
    if int(n) != n or n < 1:
        raise DomainError(f"nesting depth n must be a positive integer, got {n}")
    if int(m) != m or m < 1:
        raise DomainError(f"exponent m must be a positive integer, got {m}")


def _prepare(x: RationalLike, n: int, m: int) -> Fraction:
    x = as_rational(x)
    _check_domain(x, n, m)
    return x ** m


def eval_fn(x: RationalLike, n: int, m: int = 1) -> int:
    xm = _prepare(x, n, m)
    t = 1
    for _ in range(n):
        t = floor_rat(xm * t)
    return t


def eval_query(q: EvalQuery) -> int:
    return eval_fn(q.x, q.n, q.m)


def eval_chain(x: RationalLike, n: int, m: int = 1) -> list[int]:
    """Return [f_1(x), ..., f_n(x)]."""
    xm = _prepare(x, n, m)
    out = []
    t = 1
    for _ in range(n):
        t = floor_rat(xm * t)
        out.append(t)
    return out


def right_limit(d: RationalLike, n: int, m: int = 1) -> int:
    # f is right-continuous, so this is the same recurrence as eval_fn
    dm = _prepare(d, n, m)
    r = 1
    for _ in range(n):
        r = floor_rat(dm * r)
    return r


def left_limit(d: RationalLike, n: int, m: int = 1) -> int:
    dm = _prepare(d, n, m)
    lv = 1
    for _ in range(n):
        if lv == 0:
            # inner function is 0 near d, so every outer level is floor(0) = 0
            return 0
        lv = ceil_rat(dm * lv) - 1
    return lv


def sided_limits(d: RationalLike, n: int, m: int = 1) -> SidedLimits:
    return SidedLimits(left_limit(d, n, m), right_limit(d, n, m))
