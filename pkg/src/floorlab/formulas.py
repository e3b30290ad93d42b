"""Closed forms and predicted discontinuity sets for nested floor functions.

Nothing here evaluates f_n; every value is produced from a formula so it
can be checked against the evaluator and partitioner.  Divisions that are
claimed to be exact are checked and raise :class:`InvariantViolation` if
they are not.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError, InvariantViolation

SOURCES = ("integer", "theorem4", "conjecture7", "theorem6")


@dataclass(frozen=True)
class PredictedPoint:
    at: Fraction
    predicted_left: Optional[int]
    predicted_right: Optional[int]
    source: str
    predicted_jump: Optional[int] = None
    # formula parameters that produced the point, e.g. {"k": 3, "i": 1, "p": 0}
    params: tuple = ()

    def __post_init__(self):
        if self.source not in SOURCES:
            raise ValueError(f"unknown source {self.source!r}")
        if self.predicted_left is not None and self.predicted_right is not None:
            jump = self.predicted_right - self.predicted_left
            if self.predicted_jump is None:
                object.__setattr__(self, "predicted_jump", jump)
            elif self.predicted_jump != jump:
                raise ValueError("predicted_jump disagrees with predicted limits")
        if self.predicted_jump is not None and self.predicted_jump < 1:
            raise ValueError("a predicted jump must be at least 1")


def exact_div(num: int, den: int, what: str = "division") -> int:
    q, r = divmod(num, den)
    if r:
        raise InvariantViolation(f"{what}: {num} is not divisible by {den} (remainder {r})")
    return q


def _require_int(name: str, value: int, least: int) -> None:
    if int(value) != value or value < least:
        raise DomainError(f"{name} must be an integer >= {least}, got {value}")


def theorem1_left_limit(k: int, n: int, m: int = 1) -> int:
    """lim_{x -> k^-} f_{n,m}(x) = ((k^m - 2) k^{mn} + 1) / (k^m - 1)."""
    _require_int("k", k, 2)
    _require_int("n", n, 1)
    _require_int("m", m, 1)
    km = k ** m
    return exact_div((km - 2) * km ** n + 1, km - 1, f"left limit at k={k}, n={n}, m={m}")


def theorem1_delta(k: int, n: int) -> Fraction:
    """Width of the left neighbourhood (k - delta, k) on which f_n is constant."""
    _require_int("k", k, 2)
    _require_int("n", n, 1)
    return Fraction(k - 1, (k - 2) * k ** (n - 1) + 1)


def lemma_numerators(k: int, n: int) -> tuple[int, int]:
    """The two quantities claimed divisible by k - 1 in the integrality lemma."""
    _require_int("k", k, 2)
    _require_int("n", n, 1)
    return (k - 2) * k ** (n + 1) + 1, k ** (n + 2) - 2 * k ** (n + 1) + 1


def jump_at_integer(k: int, n: int) -> int:
    """(k^n - 1) / (k - 1), the jump of f_n at an integer k >= 2."""
    _require_int("k", k, 2)
    _require_int("n", n, 1)
    return exact_div(k ** n - 1, k - 1, f"jump at k={k}, n={n}")


def integer_point(k: int, n: int) -> PredictedPoint:
    """Predicted limits of f_n at the integer k.

    For k = 1 the closed form is singular; there the left side is the value
    on (0, 1), which is 0.
    """
    _require_int("k", k, 1)
    left = theorem1_left_limit(k, n) if k >= 2 else 0
    return PredictedPoint(Fraction(k), left, k ** n, "integer", params=(("k", k),))


def f2_points(k: int) -> list[PredictedPoint]:
    """Jumps of f_2 in [k, k+1): k + r/k for r = 0..k-1."""
    _require_int("k", k, 1)
    pts = [integer_point(k, 2)]
    for r in range(1, k):
        pts.append(PredictedPoint(Fraction(k * k + r, k), k * k + r - 1, k * k + r,
                                  "theorem4", params=(("k", k), ("r", r))))
    return pts


def f2_count(h: int) -> int:
    """Number of jumps of f_2 in [1, h)."""
    _require_int("h", h, 2)
    return h * (h - 1) // 2


def conjecture7_points(k: int) -> list[PredictedPoint]:
    """Conjectured jumps of f_3 in [k, k+1), with their predicted limits.

    The new points are k + ((k+1)i + p)/(k^2 + i), i, p in 0..k-1, with
    limits (k^3 + 2ik + i + p - 1, k^3 + 2ik + i + p).  Points inherited
    from f_2 carry only a predicted jump of k + 1, and the integer k the
    jump k^2 + k + 1 with full limits.  Where a point arises from several
    rules the inherited one wins.
    """
    _require_int("k", k, 1)
    by_point: dict[Fraction, PredictedPoint] = {}
    by_point[Fraction(k)] = integer_point(k, 3)
    for r in range(1, k):
        at = Fraction(k * k + r, k)
        by_point[at] = PredictedPoint(at, None, None, "theorem4", predicted_jump=k + 1,
                                      params=(("k", k), ("r", r)))
    for i in range(k):
        for p in range(k):
            at = k + Fraction((k + 1) * i + p, k * k + i)
            if at in by_point:
                continue
            base = k ** 3 + 2 * i * k + i + p
            by_point[at] = PredictedPoint(at, base - 1, base, "conjecture7",
                                          params=(("k", k), ("i", i), ("p", p)))
    return [by_point[x] for x in sorted(by_point)]


def theorem6_witness(k: int, n: int) -> Fraction:
    """k + 1/k^{n-1}: a jump of f_n that f_{n-1} does not have."""
    _require_int("k", k, 2)
    _require_int("n", n, 2)
    return k + Fraction(1, k ** (n - 1))


def theorem6_point(k: int, n: int) -> PredictedPoint:
    """The witness together with its predicted f_n limits (k^n, k^n + 1)."""
    return PredictedPoint(theorem6_witness(k, n), k ** n, k ** n + 1, "theorem6",
                          params=(("k", k), ("n", n)))
