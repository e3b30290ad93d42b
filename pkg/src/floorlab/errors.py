"""Exception types shared across floorlab."""


class FloorlabError(Exception):
    pass


class DomainError(FloorlabError, ValueError):
    """An argument lies outside the domain where the operation is defined."""


class ZeroDenominatorError(DomainError, ZeroDivisionError):
    pass


class UnsupportedFeatureError(FloorlabError, NotImplementedError):
    """The request is well formed but deliberately not supported (e.g. m >= 2 enumeration)."""


class BudgetExceededError(FloorlabError):
    """The work estimate for a request exceeds the configured budget."""

    def __init__(self, what, estimate, budget):
        super().__init__(f"{what}: estimated {estimate} exceeds budget {budget}")
        self.what = what
        self.estimate = estimate
        self.budget = budget


class InvariantViolation(FloorlabError, AssertionError):
    """An identity that must hold (e.g. an exact division) did not."""
