"""Command-line interface.

Exit codes: 0 ok, 1 verification failure (or incomplete report), 2 usage or
parse error, 3 domain error.  Every exact value is printed as a reduced
"p/q" string (or "p" for integers).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .errors import BudgetExceededError, DomainError, UnsupportedFeatureError
from .evaluator import eval_fn, sided_limits
from .partition import discontinuities, partition
from .rational import format_rational, parse_rational
from .svg import render_svg
from .verify import CLAIM_IDS, SuiteConfig, run_suite

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def _interval_arg(text: str) -> tuple[Fraction, Fraction]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected 'a:b', got {text!r}")
    return _rational_arg(lo), _rational_arg(hi)


def _claims_arg(text: str) -> list[str]:
    claims = [c.strip() for c in text.split(",") if c.strip()]
    bad = [c for c in claims if c not in CLAIM_IDS]
    if bad or not claims:
        raise argparse.ArgumentTypeError(
            f"unknown claim(s) {', '.join(bad) or text!r}; choose from {', '.join(CLAIM_IDS)}")
    return claims


def envelope(command: str, parameters: dict, result) -> dict:
    return {"command": command, "parameters": parameters, "result": result}


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def dump_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _render(args, command: str, params: dict, header: list[str], rows: list[list], payload, text: str) -> str:
    if args.format == "json":
        return dump_json(envelope(command, params, payload))
    if args.format == "csv":
        return dump_csv(header, rows)
    return text


def cmd_eval(args) -> str:
    value = eval_fn(args.x, args.n, args.m)
    params = {"x": format_rational(args.x), "n": args.n, "m": args.m}
    return _render(args, "eval", params, ["x", "n", "m", "value"],
                   [[params["x"], args.n, args.m, value]], {"value": value}, f"{value}\n")


def cmd_limits(args) -> str:
    lim = sided_limits(args.x, args.n, args.m)
    params = {"x": format_rational(args.x), "n": args.n, "m": args.m}
    payload = {"left": lim.left, "right": lim.right, "jump": lim.jump, "is_jump": lim.is_jump}
    text = f"left {lim.left}\nright {lim.right}\njump {lim.jump}\n"
    return _render(args, "limits", params, ["x", "n", "m", "left", "right", "jump", "is_jump"],
                   [[params["x"], args.n, args.m, lim.left, lim.right, lim.jump, str(lim.is_jump).lower()]],
                   payload, text)


def _interval_params(args) -> dict:
    return {"n": args.n, "a": format_rational(args.a), "b": format_rational(args.b)}


def cmd_partition(args) -> str:
    part = partition(args.n, args.a, args.b)
    rows = [[format_rational(iv.lo), format_rational(iv.hi), iv.value] for iv in part.intervals]
    payload = [{"lo": lo, "hi": hi, "value": v} for lo, hi, v in rows]
    text = "".join(f"[{lo}, {hi}): {v}\n" for lo, hi, v in rows)
    return _render(args, "partition", _interval_params(args), ["lo", "hi", "value"], rows, payload, text)


def cmd_discont(args) -> str:
    ds = discontinuities(args.n, args.a, args.b)
    rows = [[format_rational(d.at), d.left, d.right, d.jump] for d in ds]
    payload = [{"at": at, "left": lt, "right": rt, "jump": j} for at, lt, rt, j in rows]
    text = "".join(f"{at}\tleft {lt}\tright {rt}\tjump {j}\n" for at, lt, rt, j in rows)
    return _render(args, "discont", _interval_params(args), ["at", "left", "right", "jump"],
                   rows, payload, text)


def cmd_render(args) -> str:
    svg = render_svg(partition(args.n, args.a, args.b))
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
        return ""
    return svg


def _suite_config(args) -> SuiteConfig:
    cfg = SuiteConfig()
    if args.kmax is not None:
        for key in ("t1_k", "delta_k", "lemma_k", "t4_k", "t6_k", "c7_k", "jump_k", "mgen_k"):
            lo, _ = getattr(cfg, key)
            setattr(cfg, key, (lo, args.kmax))
    if args.nmax is not None:
        for key in ("t1_n", "delta_n", "lemma_n", "t5_n", "t6_n", "jump_n", "mgen_n"):
            lo, _ = getattr(cfg, key)
            setattr(cfg, key, (lo, args.nmax))
    if args.mmax is not None:
        cfg.lemma_m = (cfg.lemma_m[0], args.mmax)
        cfg.mgen_m = (cfg.mgen_m[0], args.mmax)
    if args.hmax is not None:
        cfg.f2count_h = (cfg.f2count_h[0], args.hmax)
    if args.interval is not None:
        cfg.t5_interval = args.interval
    return cfg


def cmd_verify(args) -> tuple[str, int]:
    cfg = _suite_config(args)
    report = run_suite(cfg, args.claims, workers=args.workers)
    params = {
        "claims": args.claims or list(CLAIM_IDS),
        "kmax": args.kmax, "nmax": args.nmax, "mmax": args.mmax, "hmax": args.hmax,
        "interval": None if args.interval is None else [format_rational(x) for x in args.interval],
    }
    doc = envelope("verify", params, report.to_dict(timing=args.timing))
    if args.report:
        with open(args.report, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(dump_json(doc))
    code = EXIT_OK if report.ok and report.complete else EXIT_VERIFY_FAILED
    if args.format == "json":
        return dump_json(doc), code
    lines = []
    for r in report.results:
        flag = "" if r.complete else " (incomplete)"
        lines.append(f"{r.claim_id:<10} {r.status:<9} checked={r.checked} "
                     f"counterexamples={len(r.counterexamples)}{flag}")
    t = report.totals()
    lines.append(f"total: {t['pass']} pass, {t['fail']} fail, {t['mismatch']} mismatch")
    if args.timing:
        lines.append(f"wall time: {report.wall_time:.3f}s")
    return "\n".join(lines) + "\n", code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="floorlab", description="Exact nested floor functions f_n(x) = floor(x floor(x ...)).")
    sub = parser.add_subparsers(dest="command", required=True)

    def point_cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("-x", type=_rational_arg, required=True, help="point, as p/q or an integer")
        p.add_argument("-n", type=int, required=True, help="nesting depth")
        p.add_argument("-m", type=int, default=1, help="exponent of x (default 1)")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        return p

    point_cmd("eval", "evaluate f_{n,m}(x)")
    point_cmd("limits", "one-sided limits of f_{n,m} at x")

    def interval_cmd(name, help_, formats=("text", "json", "csv")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("-n", type=int, required=True, help="nesting depth")
        p.add_argument("-a", type=_rational_arg, required=True, help="left end (inclusive), >= 1")
        p.add_argument("-b", type=_rational_arg, required=True, help="right end (exclusive)")
        if formats:
            p.add_argument("--format", choices=formats, default="text")
        return p

    interval_cmd("partition", "constancy intervals of f_n on [a, b)")
    interval_cmd("discont", "jump discontinuities of f_n on [a, b)")
    r = interval_cmd("render", "SVG step plot of f_n on [a, b)", formats=())
    r.add_argument("-o", "--output", help="SVG path (default: stdout)")

    v = sub.add_parser("verify", help="check the closed forms against exact computation")
    v.add_argument("--claims", type=_claims_arg, default=None,
                   help=f"comma-separated subset of {','.join(CLAIM_IDS)}")
    v.add_argument("--kmax", type=int)
    v.add_argument("--nmax", type=int)
    v.add_argument("--mmax", type=int)
    v.add_argument("--hmax", type=int)
    v.add_argument("--interval", type=_interval_arg, help="interval a:b for T5 (default 1:6)")
    v.add_argument("--workers", type=int, default=1, help="run claims in this many processes")
    v.add_argument("--report", help="write the JSON report here")
    v.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identity)")
    v.add_argument("--format", choices=("text", "json"), default="text")
    return parser


_HANDLERS = {
    "eval": cmd_eval,
    "limits": cmd_limits,
    "partition": cmd_partition,
    "discont": cmd_discont,
    "render": cmd_render,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = _HANDLERS[args.command](args)
    except (DomainError, UnsupportedFeatureError, BudgetExceededError) as err:
        print(f"floorlab {args.command}: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    code = EXIT_OK
    if isinstance(out, tuple):
        out, code = out
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
