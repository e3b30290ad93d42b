from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


def probe_limits(f, d, eps):
    """Sided values of f at d - eps and d + eps (a brute-force limit oracle)."""
    return f(d - eps), f(d + eps)


def probe_eps(d, n):
    # every breakpoint of f_j, j <= n, near d is t/v with v <= (ceil(d)+1)^n, so two
    # distinct such points differ by at least 1/(den(d) * v); eps is well inside that gap
    d = Fraction(d)
    return Fraction(1, 4 * d.denominator * (-(-d.numerator // d.denominator) + 1) ** n)


rationals = st.builds(Fraction, st.integers(-10**6, 10**6), st.integers(1, 10**4))


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
