"""Command line front end.

Subcommands: gen-group, verify-lemmas, word-eq, tup-check, cancel-sample,
zero-divisor.  Results go to stdout (text or JSON via --format), progress to
stderr.  Exit status: 0 on success/pass, 1 on a failed check (for word-eq:
words not equal), 2 on usage or runtime errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import structure
from .errors import QsemiError
from .lemmas import run_lemma_suite
from .quaternion import (QuaternionConfig, describe_elements, generate_group,
                         group_checks)
from .structure import (canonical_ground_set, cancellation_report,
                        run_tup_sweep)
from .algebra import zero_divisor_search
from .words import (RewriteConfig, canonical_form, default_config,
                    format_word, parse_word, words_equal)


def _k_value(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"k must be an integer, got {text!r}")
    if k < 2:
        raise argparse.ArgumentTypeError("k must be at least 2")
    return k


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--k", type=_k_value, required=True,
                     help="group size parameter, order 4k (k >= 2)")
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--seed", type=int, default=0,
                     help="seed for any randomized sampling")
    sub.add_argument("--max-class-size", type=_positive, default=1_000_000)
    sub.add_argument("--max-word-length", type=_nonnegative, default=0,
                     help="cap on word length; 0 means 3n")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsemi",
        description="Verification tools for the quaternion-relation monoid")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("gen-group", help="list the group elements")
    _add_common(p)

    p = subs.add_parser("verify-lemmas", help="run every lemma oracle")
    _add_common(p)
    p.add_argument("--stepss-extra", type=int, default=-1,
                   help="extra length above n for seed words; -1 means n")
    p.add_argument("--step3-samples", type=_positive, default=1000,
                   help="random tails per (element, position) cell")

    p = subs.add_parser("word-eq", help="decide equality of two words")
    _add_common(p)
    p.add_argument("w1", help="comma-separated word, e.g. 1,2,3")
    p.add_argument("w2")

    p = subs.add_parser("tup-check", help="sweep subset pairs for unique products")
    _add_common(p)
    p.add_argument("--max-len", type=_nonnegative, default=2,
                   help="ground set: canonical words up to this length")
    p.add_argument("--max-size", type=_positive, default=3)
    p.add_argument("--limit", type=_nonnegative, default=200_000,
                   help="cap on subset pairs checked; 0 means no cap")

    p = subs.add_parser("cancel-sample", help="sample the cancellation laws")
    _add_common(p)
    p.add_argument("--trials", type=_positive, default=10_000)
    p.add_argument("--max-len", type=_positive, default=12)

    p = subs.add_parser("zero-divisor", help="search for vanishing products")
    _add_common(p)
    p.add_argument("--p", type=_positive, default=2, help="prime modulus")
    p.add_argument("--trials", type=_positive, default=10_000)
    p.add_argument("--max-support", type=_positive, default=3)
    p.add_argument("--max-len", type=_positive, default=10)

    return parser


def _threads_cap() -> int | None:
    raw = os.environ.get("QSEMI_THREADS")
    if raw is None:
        return None
    try:
        cap = int(raw)
        if cap < 1:
            raise ValueError
    except ValueError:
        print(f"ignoring invalid QSEMI_THREADS={raw!r}", file=sys.stderr)
        return None
    return cap


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _payload(args, passed: bool, params: dict, details: dict) -> dict:
    return {"command": args.command, "k": args.k, "params": params,
            "passed": passed, "details": details}


def _configs(args) -> tuple[QuaternionConfig, RewriteConfig]:
    qc = QuaternionConfig(args.k)
    max_len = args.max_word_length or 3 * qc.n
    return qc, RewriteConfig(max_class_size=args.max_class_size,
                             max_word_length=max_len)


def _progress(label: str):
    def report(count: int) -> None:
        print(f"{label}: {count} done", file=sys.stderr)
    return report


def cmd_gen_group(args) -> int:
    qc, _ = _configs(args)
    g = generate_group(qc)
    rows = describe_elements(g)
    lines = [f"group of order {len(g)} on {g.n} points (k={g.k})"]
    for r in rows:
        images = ",".join(str(x) for x in r["images"])
        lines.append(f"{r['index']:3d}  {r['label']:<10} {r['cycles']:<40} {images}")
    payload = _payload(args, True, {}, {"order": len(g), "elements": rows})
    _emit(args, payload, lines)
    return 0


def cmd_verify_lemmas(args) -> int:
    qc, cfg = _configs(args)
    g = generate_group(qc)
    rng = random.Random(args.seed)
    stepss_extra = None if args.stepss_extra < 0 else args.stepss_extra
    reports = run_lemma_suite(g, cfg, stepss_extra=stepss_extra,
                              step3_samples=args.step3_samples, rng=rng)
    checks = group_checks(g)
    ok = all(r.passed for r in reports) and all(checks.values())
    lines = []
    for r in reports:
        lines.append(f"{r.lemma_id.value:<16} k={r.k}  "
                     f"{'PASS' if r.passed else 'FAIL'}")
        if not r.passed:
            lines.append(f"  counterexample: {r.counterexample}")
    for name, value in checks.items():
        lines.append(f"{name:<16} k={args.k}  {'PASS' if value else 'FAIL'}")
    params = {"seed": args.seed, "stepss_extra": args.stepss_extra,
              "step3_samples": args.step3_samples}
    details = {"lemmas": [r.to_json() for r in reports],
               "group_checks": checks}
    _emit(args, _payload(args, ok, params, details), lines)
    return 0 if ok else 1


def cmd_word_eq(args) -> int:
    qc, cfg = _configs(args)
    g = generate_group(qc)
    w1 = parse_word(args.w1, g.n)
    w2 = parse_word(args.w2, g.n)
    equal = words_equal(w1, w2, g, cfg)
    c1 = canonical_form(w1, g, cfg)
    c2 = canonical_form(w2, g, cfg)
    lines = [
        f"equal: {'yes' if equal else 'no'}",
        f"canonical w1: {format_word(c1)}",
        f"canonical w2: {format_word(c2)}",
    ]
    params = {"w1": args.w1, "w2": args.w2}
    details = {"equal": equal, "canonical_w1": format_word(c1),
               "canonical_w2": format_word(c2)}
    _emit(args, _payload(args, equal, params, details), lines)
    return 0 if equal else 1


def cmd_tup_check(args) -> int:
    qc, cfg = _configs(args)
    g = generate_group(qc)
    print(f"building ground set (length <= {args.max_len})", file=sys.stderr)
    reps = canonical_ground_set(g, cfg, args.max_len)
    print(f"{len(reps)} canonical representatives", file=sys.stderr)
    limit = args.limit or None
    summary, failure = run_tup_sweep(g, cfg, reps, args.max_size, limit=limit,
                                     progress=_progress("tup-check"))
    ok = failure is None
    lines = [json.dumps(summary), f"tup-check: {'PASS' if ok else 'FAIL'}"]
    if failure is not None:
        lines.append(f"failure: {failure}")
    params = {"max_len": args.max_len, "max_size": args.max_size,
              "limit": args.limit}
    details = dict(summary)
    if failure is not None:
        details["failure"] = failure
    _emit(args, _payload(args, ok, params, details), lines)
    return 0 if ok else 1


def cmd_cancel_sample(args) -> int:
    qc, cfg = _configs(args)
    g = generate_group(qc)
    rng = random.Random(args.seed)
    report = cancellation_report(g, cfg, args.trials, args.max_len, rng,
                                 progress=_progress("cancel-sample"))
    ok = report["passed"]
    lines = [
        f"trials: {report['trials']}",
        f"antecedent hits: {report['antecedent_hits']}",
        f"violations: {len(report['violations'])}",
        f"cancel-sample: {'PASS' if ok else 'FAIL'}",
    ]
    params = {"trials": args.trials, "max_len": args.max_len,
              "seed": args.seed}
    _emit(args, _payload(args, ok, params, report), lines)
    return 0 if ok else 1


def cmd_zero_divisor(args) -> int:
    qc, cfg = _configs(args)
    g = generate_group(qc)
    rng = random.Random(args.seed)
    found = zero_divisor_search(g, cfg, p=args.p, trials=args.trials,
                                max_support=args.max_support,
                                max_len=args.max_len, rng=rng,
                                progress=_progress("zero-divisor"))
    ok = found is None
    if found is None:
        lines = [f"no vanishing product in {args.trials} trials",
                 "zero-divisor: PASS"]
        details = {"trials": args.trials, "found": None}
    else:
        x, y = found
        lines = [f"vanishing product found: ({x.to_text()}) * ({y.to_text()})",
                 "zero-divisor: FAIL"]
        details = {"trials": args.trials,
                   "found": {"x": x.to_json(), "y": y.to_json()}}
    params = {"p": args.p, "trials": args.trials,
              "max_support": args.max_support, "max_len": args.max_len,
              "seed": args.seed}
    _emit(args, _payload(args, ok, params, details), lines)
    return 0 if ok else 1


_COMMANDS = {
    "gen-group": cmd_gen_group,
    "verify-lemmas": cmd_verify_lemmas,
    "word-eq": cmd_word_eq,
    "tup-check": cmd_tup_check,
    "cancel-sample": cmd_cancel_sample,
    "zero-divisor": cmd_zero_divisor,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    _threads_cap()  # validated for forward compatibility; work is sequential
    try:
        return _COMMANDS[args.command](args)
    except (QsemiError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
