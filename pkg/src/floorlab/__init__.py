"""Exact evaluation, one-sided limits and jump discontinuities of nested floor functions."""

from .errors import (
    BudgetExceededError,
    DomainError,
    InvariantViolation,
    UnsupportedFeatureError,
    ZeroDenominatorError,
)
from .evaluator import EvalQuery, SidedLimits, eval_fn, left_limit, right_limit, sided_limits
from .partition import (
    Discontinuity,
    Partition,
    StepInterval,
    count_discontinuities,
    discontinuities,
    partition,
)
from .rational import Rational, floor_rat, format_rational, make_rational, parse_rational, rat_arith

__version__ = "0.1.0"
