"""Brute-force discontinuity finder used to cross-check the partitioner.

Any breakpoint of f_n in [a, b) has the form t/v where v is a value of
f_{n-1} there, and f_{n-1} < b^{n-1} <= ceil(b)^{n-1} = D.  So every
breakpoint is a reduced fraction with denominator at most D.  Listing all
of them (a Farey-style enumeration) and evaluating f_n at the midpoint of
each gap recovers the step function without any of the machinery in
:mod:`floorlab.partition` or the limit recurrences.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import BudgetExceededError, DomainError
from .evaluator import eval_fn
from .partition import Discontinuity, budget_from_env
from .rational import RationalLike, as_rational, ceil_rat, floor_rat


def denominator_bound(n: int, b: RationalLike) -> int:
    return ceil_rat(as_rational(b)) ** (n - 1)


def estimate_candidates(n: int, a: RationalLike, b: RationalLike) -> int:
    a, b = as_rational(a), as_rational(b)
    d = denominator_bound(n, b)
    return ceil_rat((b - a) * d * (d + 1) / 2) + d + 1


def farey_in(lo: Fraction, hi: Fraction, max_den: int) -> list[Fraction]:
    """Sorted reduced fractions p/q in [lo, hi) with q <= max_den."""
    out = []
    for q in range(1, max_den + 1):
        p = ceil_rat(lo * q)
        while Fraction(p, q) < hi:
            if gcd(p, q) == 1:
                out.append(Fraction(p, q))
            p += 1
    out.sort()
    return out


def _predecessor(x: Fraction, max_den: int) -> Fraction:
    """Largest fraction with denominator <= max_den strictly below x."""
    best = None
    for q in range(1, max_den + 1):
        cand = Fraction(ceil_rat(x * q) - 1, q)
        if best is None or cand > best:
            best = cand
    return best


def oracle_discontinuities(n: int, a: RationalLike, b: RationalLike,
                           budget: int | None = None) -> list[Discontinuity]:
    a, b = as_rational(a), as_rational(b)
    if int(n) != n or n < 1:
        raise DomainError(f"nesting depth n must be a positive integer, got {n}")
    if a < 1:
        raise DomainError(f"enumeration requires a >= 1, got a = {a}")
    if a >= b:
        raise DomainError(f"empty interval [{a}, {b})")
    budget = budget_from_env() if budget is None else budget
    est = estimate_candidates(n, a, b)
    if est > budget:
        raise BudgetExceededError(f"oracle(n={n}, [{a}, {b}))", est, budget)

    d = denominator_bound(n, b)
    cands = farey_in(a, b, d)
    # sentinels so that a has a left gap and the last candidate a right gap
    pts = [_predecessor(a, d)] + cands + [b]
    gap_values = [eval_fn((x + y) / 2, n) for x, y in zip(pts, pts[1:])]
    out = []
    for i, c in enumerate(cands):
        left, right = gap_values[i], gap_values[i + 1]
        if left != right:
            out.append(Discontinuity(c, left, right))
    return out
