"""Command-line front end: ``superspace <subcommand> [flags]``.

Exit status is 0 on success, 1 when a computation fails (or a verify suite
has a failing instance, or the time budget runs out) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import format_poly
from .osp import enumerate_osp, format_osp, substaircase
from .series import (HILBERT_METHODS, BudgetExceeded, Deadline, grfrob, hilbert, hook_expansion,
                     symfunc_latex)
from .vandermonde import delta, involution, involution_brute
from .verify import INFORMATIONAL, SUITES, verify
from .words import format_word, parse_word


class UsageError(Exception):
    pass


def _threads() -> int:
    raw = os.environ.get("SUPERSPACE_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"SUPERSPACE_THREADS must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError("SUPERSPACE_THREADS must be at least 1")
    return value


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"-{name} is required")
    n, k, s = args.n, args.k, args.s
    if n is not None and n < 1:
        raise UsageError("need n >= 1")
    if s is not None and s < 0:
        raise UsageError("need s >= 0")
    if k is not None and s is not None and k < s:
        raise UsageError("need k >= s")
    if n is not None and s is not None and s > n and args.command in ("delta", "involution"):
        raise UsageError("need s <= n")


def _emit(args, payload: dict, text: str, latex: str | None = None) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    elif args.format == "latex":
        if latex is None:
            raise UsageError(f"--format latex is not available for {args.command}")
        print(latex)
    else:
        print(text)


# ----------------------------------------------------------------------
# subcommands

def cmd_enumerate(args, deadline):
    _require(args, "n", "k", "s")
    sigmas = []
    for sigma in enumerate_osp(args.n, args.k, args.s, args.r):
        deadline.check()
        sigmas.append(format_osp(sigma))
    payload = {"n": args.n, "k": args.k, "s": args.s, "r": args.r, "osp": sigmas}
    _emit(args, payload, "\n".join(sigmas))
    return 0


def cmd_hilbert(args, deadline):
    _require(args, "n", "k", "s")
    methods = HILBERT_METHODS if args.cross_check else (args.method,)
    tables = {m: hilbert(args.n, args.k, args.s, m, deadline=deadline) for m in methods}
    table = tables[methods[0]]
    agree = all(t == table for t in tables.values())
    payload = {"n": args.n, "k": args.k, "s": args.s, "hilbert": table.to_json(), "dim": table.total()}
    text = table.text()
    if args.cross_check:
        payload["methods"] = {m: t.to_json() for m, t in tables.items()}
        payload["agree"] = agree
        text += "\n" + ("all methods agree" if agree else "METHODS DISAGREE")
    _emit(args, payload, text, table.latex())
    return 0 if agree else 1


def cmd_frobenius(args, deadline):
    _require(args, "n", "k", "s")
    table = grfrob(args.n, args.k, args.s, args.method, deadline=deadline)
    payload = {"n": args.n, "k": args.k, "s": args.s, "frobenius": table.to_json()}
    _emit(args, payload, table.text(), table.latex())
    return 0


def cmd_hooks(args, deadline):
    _require(args, "n", "k", "s")
    by_r = hook_expansion(args.n, args.k, args.s)
    payload = {"n": args.n, "k": args.k, "s": args.s,
               "hooks": {str(r): v.to_json() for r, v in sorted(by_r.items())}}
    text = "\n".join(f"z^{r}: {v}" for r, v in sorted(by_r.items()))
    latex = " + ".join(f"z^{{{r}}} \\left({symfunc_latex(v)}\\right)" for r, v in sorted(by_r.items()))
    _emit(args, payload, text, latex)
    return 0


def cmd_verify(args, deadline):
    if args.n is not None and args.n < 1:
        raise UsageError("need n >= 1")
    report = verify(args.suite, args.n, args.k, args.s, max_seconds=args.max_seconds)
    lines = [f"{'PASS' if i['pass'] else 'FAIL'} {json.dumps(i['input'], sort_keys=True)}"
             for i in report["instances"]]
    lines.append(f"{args.suite}: {'all pass' if report['all_pass'] else 'not all pass'}")
    if "aborted" in report:
        lines.append(f"aborted: {report['aborted']}")
    _emit(args, report, "\n".join(lines))
    if "aborted" in report:
        return 1
    return 0 if report["all_pass"] or args.suite in INFORMATIONAL else 1


def cmd_involution(args, deadline):
    _require(args, "n", "k", "s")
    words = [parse_word(args.word)] if args.word else substaircase(args.n, args.k, args.s)
    rows = []
    for word in words:
        deadline.check()
        res = involution(word, args.n, args.k, args.s)
        row = {"word": format_word(word), "image": format_word(res.word),
               "staircase": format_word(res.staircase), "certificate": format_word(res.certificate)}
        if args.brute:
            brute_word, coeff = involution_brute(word, args.n, args.k, args.s)
            row["brute"] = format_word(brute_word)
            row["scalar"] = str(coeff)
        rows.append(row)
    payload = {"n": args.n, "k": args.k, "s": args.s, "involution": rows}
    text = "\n".join(" ".join(f"{key}={val}" for key, val in row.items()) for row in rows)
    _emit(args, payload, text)
    return 0 if all(r.get("brute", r["image"]) == r["image"] for r in rows) else 1


def cmd_delta(args, deadline):
    _require(args, "n", "k", "s")
    f = delta(args.n, args.k, args.s)
    payload = {"n": args.n, "k": args.k, "s": args.s, "delta": format_poly(f), "terms": len(f.terms())}
    _emit(args, payload, format_poly(f))
    return 0


COMMANDS = {
    "enumerate": cmd_enumerate,
    "hilbert": cmd_hilbert,
    "frobenius": cmd_frobenius,
    "hooks": cmd_hooks,
    "verify": cmd_verify,
    "involution": cmd_involution,
    "delta": cmd_delta,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    for flag in "nksrj":
        common.add_argument(f"-{flag}", type=int, default=None)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    common.add_argument("--max-seconds", type=float, default=None, help="soft time budget")

    parser = argparse.ArgumentParser(prog="superspace", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("enumerate", parents=[common], help="list ordered set superpartitions")
    p = sub.add_parser("hilbert", parents=[common], help="bigraded Hilbert series")
    p.add_argument("--method", choices=HILBERT_METHODS, default="recursive")
    p.add_argument("--cross-check", action="store_true", help="run every method and compare")
    p = sub.add_parser("frobenius", parents=[common], help="bigraded Frobenius image")
    p.add_argument("--method", choices=("combinatorial", "module_oracle"), default="combinatorial")
    sub.add_parser("hooks", parents=[common], help="hook-product expansion by theta-degree")
    p = sub.add_parser("verify", parents=[common], help="run an identity suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p = sub.add_parser("involution", parents=[common], help="the involution on substaircase words")
    p.add_argument("--word", help="comma separated letters, '~' marks a bar, e.g. 1,~2,0")
    p.add_argument("--brute", action="store_true", help="also expand m (.) delta directly")
    sub.add_parser("delta", parents=[common], help="the superspace Vandermonde")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _threads()
        return COMMANDS[args.command](args, Deadline(args.max_seconds))
    except UsageError as exc:
        print(f"superspace: error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(json.dumps({"aborted": str(exc), "command": args.command}) if args.format == "json"
              else f"aborted: {exc}")
        return 1
    except (ValueError, ArithmeticError) as exc:
        print(f"superspace: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
