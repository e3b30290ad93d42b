"""Claim suite: closed forms and predicted sets versus exact ground truth.

Each claim compares values from :mod:`floorlab.formulas` with the
evaluator, the partitioner, or both, over a configurable range.  A claim
never stops at the first disagreement; every counterexample is collected.
Claim ids:

    T1         left limit at an integer, closed form vs recurrence (m = 1)
    T1_delta   f_n is constant on (k - delta_n, k)
    Lemma      exactness of every closed-form division
    T4         jumps of f_2 on [k, k+1) with their limits
    C_f2count  number of jumps of f_2 on [1, h)
    T5         jump sets strictly nested in n
    T6         k + 1/k^{n-1} is new at depth n; counts grow with n
    C7         conjectured jump set of f_3 and its limits (an experiment)
    JumpInt    jump at integer k is (k^n - 1)/(k - 1)
    M_gen      left limit at an integer for x^m, m >= 2
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from . import formulas
from .errors import BudgetExceededError, FloorlabError
from .evaluator import eval_fn, left_limit, sided_limits
from .partition import (
    budget_from_env,
    count_discontinuities,
    discontinuities,
    discontinuities_of,
    partition_levels,
)
from .rational import format_rational

CLAIM_IDS = ("T1", "T1_delta", "Lemma", "T4", "C_f2count", "T5", "T6", "C7", "JumpInt", "M_gen")

PASS, FAIL, MISMATCH = "pass", "fail", "mismatch"


@dataclass
class SuiteConfig:
    """Inclusive ranges for every claim.  Defaults are the published check ranges."""

    t1_k: tuple[int, int] = (2, 12)
    t1_n: tuple[int, int] = (1, 10)
    delta_k: tuple[int, int] = (2, 8)
    delta_n: tuple[int, int] = (1, 6)
    lemma_k: tuple[int, int] = (2, 50)
    lemma_n: tuple[int, int] = (1, 20)
    lemma_m: tuple[int, int] = (1, 3)
    t4_k: tuple[int, int] = (1, 30)
    f2count_h: tuple[int, int] = (2, 50)
    t5_n: tuple[int, int] = (2, 5)
    t5_interval: tuple[Fraction, Fraction] = (Fraction(1), Fraction(6))
    t6_k: tuple[int, int] = (2, 6)
    t6_n: tuple[int, int] = (2, 5)
    c7_k: tuple[int, int] = (1, 12)
    jump_k: tuple[int, int] = (2, 10)
    jump_n: tuple[int, int] = (1, 6)
    mgen_k: tuple[int, int] = (2, 12)
    mgen_n: tuple[int, int] = (1, 10)
    mgen_m: tuple[int, int] = (2, 3)
    budget: int = field(default_factory=budget_from_env)

    def describe(self, claim_id: str) -> dict:
        keys = _RANGE_KEYS[claim_id]
        out = {}
        for key in keys:
            lo, hi = getattr(self, key)
            out[key] = [_jsonable(lo), _jsonable(hi)]
        return out


_RANGE_KEYS = {
    "T1": ("t1_k", "t1_n"),
    "T1_delta": ("delta_k", "delta_n"),
    "Lemma": ("lemma_k", "lemma_n", "lemma_m"),
    "T4": ("t4_k",),
    "C_f2count": ("f2count_h",),
    "T5": ("t5_n", "t5_interval"),
    "T6": ("t6_k", "t6_n"),
    "C7": ("c7_k",),
    "JumpInt": ("jump_k", "jump_n"),
    "M_gen": ("mgen_k", "mgen_n", "mgen_m"),
}


@dataclass
class ClaimResult:
    claim_id: str
    range: dict
    status: str
    counterexamples: list = field(default_factory=list)
    checked: int = 0
    complete: bool = True
    skipped: list = field(default_factory=list)
    details: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return _jsonable(asdict(self))


@dataclass
class VerificationReport:
    results: list[ClaimResult]
    wall_time: float = 0.0

    @property
    def complete(self) -> bool:
        return all(r.complete for r in self.results)

    @property
    def ok(self) -> bool:
        return all(r.status == PASS for r in self.results)

    def totals(self) -> dict:
        counts = {PASS: 0, FAIL: 0, MISMATCH: 0}
        for r in self.results:
            counts[r.status] += 1
        counts["claims"] = len(self.results)
        counts["counterexamples"] = sum(len(r.counterexamples) for r in self.results)
        return counts

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "claims": [r.to_dict() for r in self.results],
            "complete": self.complete,
            "totals": self.totals(),
        }
        if timing:
            out["meta"] = {"wall_time_s": round(self.wall_time, 6)}
        return out


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _irange(bounds: tuple[int, int]) -> range:
    return range(bounds[0], bounds[1] + 1)


class _Collector:
    def __init__(self, claim_id: str, cfg: SuiteConfig, failure_status: str = FAIL):
        self.result = ClaimResult(claim_id, cfg.describe(claim_id), PASS)
        self.failure_status = failure_status

    def check(self, inputs: dict, expected, actual) -> bool:
        self.result.checked += 1
        if expected != actual:
            self.result.counterexamples.append(
                {"inputs": inputs, "expected": expected, "actual": actual})
            return False
        return True

    def skip(self, inputs: dict, err: BudgetExceededError) -> None:
        self.result.complete = False
        self.result.skipped.append({"inputs": inputs, "reason": str(err)})

    def finish(self) -> ClaimResult:
        if self.result.counterexamples:
            self.result.status = self.failure_status
        self.result.counterexamples = _jsonable(self.result.counterexamples)
        self.result.details = _jsonable(self.result.details)
        return self.result


def _disc_rows(ds) -> list[dict]:
    return [{"at": d.at, "left": d.left, "right": d.right} for d in ds]


def check_t1(cfg: SuiteConfig) -> ClaimResult:
    c = _Collector("T1", cfg)
    for k in _irange(cfg.t1_k):
        for n in _irange(cfg.t1_n):
            c.check({"k": k, "n": n, "m": 1}, formulas.theorem1_left_limit(k, n, 1),
                    left_limit(k, n, 1))
    return c.finish()


def check_t1_delta(cfg: SuiteConfig) -> ClaimResult:
    c = _Collector("T1_delta", cfg)
    for k in _irange(cfg.delta_k):
        for n in _irange(cfg.delta_n):
            delta = formulas.theorem1_delta(k, n)
            expected = formulas.theorem1_left_limit(k, n, 1)
            for j in range(1, 8):
                x = k - delta * j / 8
                c.check({"k": k, "n": n, "x": x}, expected, eval_fn(x, n))
    return c.finish()


def check_lemma(cfg: SuiteConfig) -> ClaimResult:
    c = _Collector("Lemma", cfg)
    for k in _irange(cfg.lemma_k):
        for n in _irange(cfg.lemma_n):
            n1_num, n2_base = formulas.lemma_numerators(k, n)
            c.check({"k": k, "n": n, "quantity": "(k-2)k^(n+1)+1"}, 0, n1_num % (k - 1))
            c.check({"k": k, "n": n, "quantity": "k^(n+2)-2k^(n+1)+1"}, 0, n2_base % (k - 1))
            c.check({"k": k, "n": n, "quantity": "k^n-1"}, 0, (k ** n - 1) % (k - 1))
            for m in _irange(cfg.lemma_m):
                km = k ** m
                c.check({"k": k, "n": n, "m": m, "quantity": "(k^m-2)k^(mn)+1"}, 0,
                        ((km - 2) * km ** n + 1) % (km - 1))
    return c.finish()


def check_t4(cfg: SuiteConfig) -> ClaimResult:
    c = _Collector("T4", cfg)
    for k in _irange(cfg.t4_k):
        inputs = {"k": k}
        try:
            actual = discontinuities(2, k, k + 1, budget=cfg.budget)
        except BudgetExceededError as err:
            c.skip(inputs, err)
            continue
        predicted = formulas.f2_points(k)
        c.check(inputs,
                [{"at": p.at, "left": p.predicted_left, "right": p.predicted_right} for p in predicted],
                _disc_rows(actual))
        for p in predicted:
            if p.source == "theorem4":
                c.check({"k": k, "at": p.at, "quantity": "jump"}, 1, sided_limits(p.at, 2).jump)
    return c.finish()


def check_f2count(cfg: SuiteConfig) -> ClaimResult:
    c = _Collector("C_f2count", cfg)
    for h in _irange(cfg.f2count_h):
        try:
            actual = count_discontinuities(2, 1, h, budget=cfg.budget)
        except BudgetExceededError as err:
            c.skip({"h": h}, err)
            continue
        c.check({"h": h}, formulas.f2_count(h), actual)
    return c.finish()


def check_t5(cfg: SuiteConfig) -> ClaimResult:
    c = _Collector("T5", cfg)
    a, b = cfg.t5_interval
    nmax = cfg.t5_n[1]
    try:
        levels = partition_levels(nmax, a, b, budget=cfg.budget)
    except BudgetExceededError as err:
        c.skip({"n": nmax, "a": a, "b": b}, err)
        return c.finish()
    sets = [{d.at for d in discontinuities_of(p)} for p in levels]
    for n in _irange(cfg.t5_n):
        lower, upper = sets[n - 2], sets[n - 1]
        inputs = {"n": n, "a": a, "b": b}
        c.check({**inputs, "quantity": "missing from P(f_n)"}, [], sorted(lower - upper))
        c.check({**inputs, "quantity": "strict"}, True, len(upper) > len(lower))
        c.check({**inputs, "quantity": "merges"}, 0, levels[n - 1].merges)
    return c.finish()


def check_t6(cfg: SuiteConfig) -> ClaimResult:
    c = _Collector("T6", cfg)
    nmax = cfg.t6_n[1]
    for k in _irange(cfg.t6_k):
        try:
            levels = partition_levels(nmax, k, k + 1, budget=cfg.budget)
        except BudgetExceededError as err:
            c.skip({"k": k, "n": nmax}, err)
            continue
        found = [{d.at: d for d in discontinuities_of(p)} for p in levels]
        for n in _irange(cfg.t6_n):
            pt = formulas.theorem6_point(k, n)
            here, before = found[n - 1], found[n - 2]
            inputs = {"k": k, "n": n, "at": pt.at}
            c.check({**inputs, "quantity": "in P(f_n)"}, True, pt.at in here)
            c.check({**inputs, "quantity": "in P(f_n-1)"}, False, pt.at in before)
            lim = sided_limits(pt.at, n)
            c.check({**inputs, "quantity": "limits"},
                    [pt.predicted_left, pt.predicted_right], [lim.left, lim.right])
        counts = [len(f) for f in found]
        c.check({"k": k, "quantity": "counts strictly increase for n=1.." + str(nmax)},
                True, all(x < y for x, y in zip(counts, counts[1:])))
    return c.finish()


def compare_conjecture7(k: int, budget: int | None = None) -> dict:
    """Predicted vs computed jumps of f_3 on [k, k+1)."""
    predicted = {p.at: p for p in formulas.conjecture7_points(k)}
    computed = {d.at: d for d in discontinuities(3, k, k + 1, budget=budget)}
    missing = sorted(set(computed) - set(predicted))
    spurious = sorted(set(predicted) - set(computed))
    wrong = []
    for at in sorted(set(predicted) & set(computed)):
        p, d = predicted[at], computed[at]
        if p.predicted_left is not None and (p.predicted_left, p.predicted_right) != (d.left, d.right):
            wrong.append({"at": at, "source": p.source,
                          "expected": [p.predicted_left, p.predicted_right],
                          "actual": [d.left, d.right]})
        elif p.predicted_jump != d.jump:
            wrong.append({"at": at, "source": p.source, "expected_jump": p.predicted_jump,
                          "actual": [d.left, d.right]})
    return {
        "k": k,
        "predicted": len(predicted),
        "computed": len(computed),
        "not_predicted": [{"at": at, "left": computed[at].left, "right": computed[at].right}
                          for at in missing],
        "not_a_jump": [{"at": at, "source": predicted[at].source} for at in spurious],
        "wrong_limits": wrong,
        "match": not (missing or spurious or wrong),
    }


def check_c7(cfg: SuiteConfig) -> ClaimResult:
    c = _Collector("C7", cfg, failure_status=MISMATCH)
    for k in _irange(cfg.c7_k):
        try:
            row = compare_conjecture7(k, cfg.budget)
        except BudgetExceededError as err:
            c.skip({"k": k}, err)
            continue
        c.result.details.append(row)
        c.result.checked += 1
        for item in row["not_predicted"]:
            c.result.counterexamples.append(
                {"inputs": {"k": k, "at": item["at"]}, "expected": "no jump",
                 "actual": [item["left"], item["right"]]})
        for item in row["not_a_jump"]:
            c.result.counterexamples.append(
                {"inputs": {"k": k, "at": item["at"], "source": item["source"]},
                 "expected": "jump", "actual": "no jump"})
        for item in row["wrong_limits"]:
            expected = item.get("expected", {"jump": item.get("expected_jump")})
            c.result.counterexamples.append(
                {"inputs": {"k": k, "at": item["at"], "source": item["source"]},
                 "expected": expected, "actual": item["actual"]})
    return c.finish()


def check_jump_int(cfg: SuiteConfig) -> ClaimResult:
    c = _Collector("JumpInt", cfg)
    for k in _irange(cfg.jump_k):
        for n in _irange(cfg.jump_n):
            # a short window starting at k is enough to see the jump at k
            window = k + Fraction(1, k ** n)
            inputs = {"k": k, "n": n}
            try:
                ds = discontinuities(n, k, window, budget=cfg.budget)
            except BudgetExceededError as err:
                c.skip(inputs, err)
                continue
            at_k = [d.jump for d in ds if d.at == k]
            c.check(inputs, [formulas.jump_at_integer(k, n)], at_k)
    return c.finish()


def check_m_gen(cfg: SuiteConfig) -> ClaimResult:
    c = _Collector("M_gen", cfg)
    for k in _irange(cfg.mgen_k):
        for n in _irange(cfg.mgen_n):
            for m in _irange(cfg.mgen_m):
                c.check({"k": k, "n": n, "m": m}, formulas.theorem1_left_limit(k, n, m),
                        left_limit(k, n, m))
    return c.finish()


CHECKS: dict[str, Callable[[SuiteConfig], ClaimResult]] = {
    "T1": check_t1,
    "T1_delta": check_t1_delta,
    "Lemma": check_lemma,
    "T4": check_t4,
    "C_f2count": check_f2count,
    "T5": check_t5,
    "T6": check_t6,
    "C7": check_c7,
    "JumpInt": check_jump_int,
    "M_gen": check_m_gen,
}


def run_claim(claim_id: str, cfg: SuiteConfig) -> ClaimResult:
    try:
        return CHECKS[claim_id](cfg)
    except FloorlabError as err:
        # an invariant violation inside a closed form is itself a failure
        res = ClaimResult(claim_id, cfg.describe(claim_id), FAIL)
        res.counterexamples.append({"inputs": {}, "expected": "no error", "actual": repr(err)})
        return res


def run_suite(cfg: SuiteConfig | None = None, claims=None, workers: int = 1) -> VerificationReport:
    cfg = cfg or SuiteConfig()
    claims = list(CLAIM_IDS if claims is None else claims)
    unknown = [c for c in claims if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown claim ids: {', '.join(unknown)}")
    # each claim once, in canonical order, however it was requested
    claims = [c for c in CLAIM_IDS if c in set(claims)]
    start = time.perf_counter()
    if workers > 1 and len(claims) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_claim, claims, [cfg] * len(claims)))
    else:
        results = [run_claim(c, cfg) for c in claims]
    return VerificationReport(results, time.perf_counter() - start)
