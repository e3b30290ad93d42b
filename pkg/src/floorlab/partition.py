"""Constancy intervals and jump discontinuities of f_n on [a, b), m = 1.

The partition is built level by level.  f_1 = floor(x) is constant on unit
intervals.  If f_{j} equals v on [l, u), then f_{j+1}(x) = floor(v*x) there,
which only changes at the points t/v, so each interval of level j splits at
every t/v strictly inside it.  Every breakpoint is therefore generated
directly and the result is exact and complete; nothing is searched for.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BudgetExceededError, DomainError, UnsupportedFeatureError
from .evaluator import sided_limits
from .rational import RationalLike, as_rational, ceil_rat, floor_rat

DEFAULT_BUDGET = 5_000_000


def budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    raw = os.environ.get("FLOORLAB_BUDGET")
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"FLOORLAB_BUDGET must be an integer, got {raw!r}") from None
    if value < 1:
        raise DomainError("FLOORLAB_BUDGET must be positive")
    return value


@dataclass(frozen=True)
class StepInterval:
    lo: Fraction
    hi: Fraction
    value: int


@dataclass(frozen=True)
class Discontinuity:
    at: Fraction
    left: int
    right: int

    @property
    def jump(self) -> int:
        return self.right - self.left


@dataclass(frozen=True)
class Partition:
    n: int
    a: Fraction
    b: Fraction
    intervals: tuple[StepInterval, ...]
    # adjacent equal-valued intervals merged while refining; expected to stay 0
    merges: int = field(default=0, compare=False)

    def breakpoints(self) -> list[Fraction]:
        """Interior boundaries, in increasing order."""
        return [iv.lo for iv in self.intervals[1:]]

    def value_at(self, x: RationalLike) -> int:
        x = as_rational(x)
        if not (self.a <= x < self.b):
            raise DomainError(f"{x} outside [{self.a}, {self.b})")
        lo, hi = 0, len(self.intervals)
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.intervals[mid].lo <= x:
                lo = mid
            else:
                hi = mid
        return self.intervals[lo].value


def _check_args(n: int, a: Fraction, b: Fraction, m: int) -> None:
    if m != 1:
        raise UnsupportedFeatureError(
            "discontinuity enumeration needs m = 1: breakpoints of floor(x^m) "
            "are m-th roots and are not rational in general"
        )
    if int(n) != n or n < 1:
        raise DomainError(f"nesting depth n must be a positive integer, got {n}")
    if a < 1:
        raise DomainError(f"enumeration requires a >= 1, got a = {a}")
    if a >= b:
        raise DomainError(f"empty interval [{a}, {b})")


def estimate_intervals(n: int, a: RationalLike, b: RationalLike) -> int:
    """Upper bound on the interval count: f_n is increasing with range within [floor(a)^n, b^n]."""
    a, b = as_rational(a), as_rational(b)
    return ceil_rat(b ** n) - floor_rat(a) ** n + 1


def _refine(intervals: list[StepInterval]) -> list[StepInterval]:
    out = []
    for iv in intervals:
        v = iv.value
        lo = iv.lo
        cur = floor_rat(v * lo)
        # breakpoints t/v with v*lo < t < v*hi
        t = cur + 1
        end = v * iv.hi
        while t < end:
            p = Fraction(t, v)
            out.append(StepInterval(lo, p, cur))
            lo, cur = p, t
            t += 1
        out.append(StepInterval(lo, iv.hi, cur))
    return out


def _merge(intervals: list[StepInterval]) -> tuple[list[StepInterval], int]:
    out = [intervals[0]]
    merges = 0
    for iv in intervals[1:]:
        if iv.value == out[-1].value:
            out[-1] = StepInterval(out[-1].lo, iv.hi, iv.value)
            merges += 1
        else:
            out.append(iv)
    return out, merges


def partition_levels(n: int, a: RationalLike, b: RationalLike, m: int = 1,
                     budget: int | None = None) -> list[Partition]:
    """Partitions of f_1, ..., f_n on [a, b), computed in one pass."""
    a, b = as_rational(a), as_rational(b)
    _check_args(n, a, b, m)
    budget = budget_from_env() if budget is None else budget
    est = estimate_intervals(n, a, b)
    if est > budget:
        raise BudgetExceededError(f"partition(n={n}, [{a}, {b}))", est, budget)

    intervals = []
    lo = a
    k = floor_rat(a)
    while lo < b:
        hi = min(Fraction(k + 1), b)
        intervals.append(StepInterval(lo, hi, k))
        lo, k = hi, k + 1

    levels = [Partition(1, a, b, tuple(intervals))]
    for depth in range(2, n + 1):
        intervals, merges = _merge(_refine(intervals))
        levels.append(Partition(depth, a, b, tuple(intervals), merges))
    return levels


def partition(n: int, a: RationalLike, b: RationalLike, m: int = 1,
              budget: int | None = None) -> Partition:
    return partition_levels(n, a, b, m, budget)[-1]


def discontinuities_of(part: Partition) -> list[Discontinuity]:
    out = []
    start = sided_limits(part.a, part.n)
    if start.is_jump:
        out.append(Discontinuity(part.a, start.left, start.right))
    ivs = part.intervals
    for prev, nxt in zip(ivs, ivs[1:]):
        out.append(Discontinuity(nxt.lo, prev.value, nxt.value))
    return out


def discontinuities(n: int, a: RationalLike, b: RationalLike, m: int = 1,
                    budget: int | None = None) -> list[Discontinuity]:
    """Every jump of f_n in [a, b), with exact left and right limits.

    The point ``a`` itself is included only when f_n actually jumps there.
    """
    return discontinuities_of(partition(n, a, b, m, budget))


def count_discontinuities(n: int, a: RationalLike, b: RationalLike, m: int = 1,
                          budget: int | None = None) -> int:
    return len(discontinuities(n, a, b, m, budget))
