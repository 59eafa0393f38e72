"""Command-line front end.

Exit codes: 0 success / all checks pass, 1 verification failures present,
2 usage or domain error, 3 budget exceeded.

Machine output is deterministic: JSON is one object per line with fixed key
order (sequence terms rendered as decimal strings so nothing is rounded),
CSV has one fixed header per record type and "\n" line endings.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from contextlib import nullcontext
from typing import TextIO

from .atlas import atlas_rows, write_atlas, write_wss, wss_scan
from .core import (
    DEFAULT_DIGIT_BUDGET,
    RecurrenceParams,
    cassini_value,
    check_term_budget,
    term,
)
from .divisibility import (
    divisibility_sequence_check,
    power_divisibility_check,
    repetition_law_check,
    square_divisibility_check,
    trailing_zeros_report,
)
from .errors import BudgetExceededError, LucasLabError
from .identities import (
    det_power_identity_check,
    determinant_congruence_check,
    gcd_companion_check,
    multiplication_formula_check,
    period_step_congruence,
)
from .modular import (
    DEFAULT_STATE_BUDGET,
    cycle_structure,
    period,
    period_law_report,
    rank,
    squares_period_law_report,
    term_mod,
    zero_indices_check,
)
from .verify import VerifyConfig, parse_config, run_verification


def _params(args: argparse.Namespace) -> RecurrenceParams:
    return RecurrenceParams(args.A, args.B)


def _emit(records: list[dict], fields: tuple[str, ...], fmt: str, sink: TextIO) -> None:
    """Write records as JSON lines or CSV with the given column order."""
    if fmt == "json":
        for rec in records:
            sink.write(json.dumps(rec, separators=(",", ":")) + "\n")
        return
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(fields)
    for rec in records:
        row = []
        for f in fields:
            v = rec.get(f)
            if v is None:
                row.append("")
            elif isinstance(v, bool):
                row.append("true" if v else "false")
            elif isinstance(v, (list, tuple)):
                row.append(";".join(str(x) for x in v))
            else:
                row.append(v)
        writer.writerow(row)


def _ladder_json(ladder: tuple[tuple[int, int], ...]) -> list[list[int]]:
    return [[e, k] for e, k in ladder]


def _ladder_flat(ladder: tuple[tuple[int, int], ...]) -> str:
    return ";".join(f"{e}:{k}" for e, k in ladder)


def _inf_str(v: int | float | None) -> int | str | None:
    if v is None:
        return None
    return "inf" if v == math.inf else v


# --- subcommand handlers, each returning (records, fields, exit_code) --------

def _cmd_term(args) -> tuple[list[dict], tuple[str, ...], int]:
    params = _params(args)
    check_term_budget(params, args.n, args.budget or DEFAULT_DIGIT_BUDGET)
    value = term(params, args.n)
    rec = {"A": args.A, "B": args.B, "n": args.n, "term": str(value)}
    return [rec], ("A", "B", "n", "term"), 0


def _cmd_term_mod(args):
    rec = {"A": args.A, "B": args.B, "n": args.n, "m": args.modulus,
           "residue": term_mod(_params(args), args.n, args.modulus)}
    return [rec], ("A", "B", "n", "m", "residue"), 0


def _cmd_period(args):
    k = period(_params(args), args.modulus,
               state_budget=args.budget or DEFAULT_STATE_BUDGET)
    rec = {"A": args.A, "B": args.B, "m": args.modulus, "period": k}
    return [rec], ("A", "B", "m", "period"), 0


def _cmd_cycle(args):
    cs = cycle_structure(_params(args), args.modulus,
                         state_budget=args.budget or DEFAULT_STATE_BUDGET)
    rec = {"A": args.A, "B": args.B, "m": args.modulus, "pure": cs.pure,
           "tail_len": cs.tail_len, "cycle_len": cs.cycle_len}
    return [rec], ("A", "B", "m", "pure", "tail_len", "cycle_len"), 0


def _cmd_rank(args):
    rr = rank(_params(args), args.modulus,
              state_budget=args.budget or DEFAULT_STATE_BUDGET)
    rec = {"A": args.A, "B": args.B, "m": args.modulus, "alpha": rr.alpha,
           "valuation_at_alpha": _inf_str(rr.valuation_at_alpha)}
    return [rec], ("A", "B", "m", "alpha", "valuation_at_alpha"), 0


def _law_records(args, report) -> tuple[list[dict], tuple[str, ...], int]:
    rec = {"A": args.A, "B": args.B, "p": args.p, "e_max": args.e,
           "ladder": _ladder_json(report.ladder), "t": report.t,
           "law_holds": report.law_holds}
    if args.format == "csv":
        rec["ladder"] = _ladder_flat(report.ladder)
    return [rec], ("A", "B", "p", "e_max", "ladder", "t", "law_holds"), 0


def _cmd_period_law(args):
    return _law_records(args, period_law_report(
        _params(args), args.p, args.e, state_budget=args.budget or DEFAULT_STATE_BUDGET))


def _cmd_squares_law(args):
    return _law_records(args, squares_period_law_report(
        _params(args), args.p, args.e, state_budget=args.budget or DEFAULT_STATE_BUDGET))


def _cmd_repetition(args):
    rep = repetition_law_check(_params(args), args.p, scan_bound=args.limit or 0)
    rec = {"A": args.A, "B": args.B, "p": args.p,
           "base_rank": rep.base_rank, "base_valuation": rep.base_valuation,
           "predicted_next_rank": rep.predicted_next_rank,
           "observed_next_rank": rep.observed_next_rank,
           "observed_valuation_at_pn": _inf_str(rep.observed_valuation_at_pn),
           "holds": rep.holds}
    return [rec], tuple(rec.keys()), 0


def _cmd_square_div(args):
    chk = square_divisibility_check(_params(args), args.n, args.limit or 30,
                                    digit_budget=args.budget or DEFAULT_DIGIT_BUDGET)
    rec = {"A": args.A, "B": args.B, "n": args.n, "m_max": args.limit or 30,
           "holds": chk.holds,
           "first_counterexample": chk.counterexamples[0][0] if chk.counterexamples else None}
    return [rec], tuple(rec.keys()), 0


def _cmd_power_div(args):
    chk = power_divisibility_check(_params(args), args.n, args.limit or 2,
                                   digit_budget=args.budget or DEFAULT_DIGIT_BUDGET)
    rec = {"A": args.A, "B": args.B, "n": args.n, "k_max": args.limit or 2,
           "holds": chk.holds,
           "first_counterexample": chk.counterexamples[0][0] if chk.counterexamples else None,
           "skipped_k": [k for k, _ in chk.skipped]}
    return [rec], tuple(rec.keys()), 0


def _cmd_div_seq(args):
    chk = divisibility_sequence_check(_params(args), args.a_max, args.b_max)
    rec = {"A": args.A, "B": args.B, "a_max": args.a_max, "b_max": args.b_max,
           "holds": chk.holds, "degenerate": list(chk.degenerate),
           "collision_indices": list(chk.collision_indices),
           "counterexamples": [[a, b] for a, b, *_ in chk.counterexamples[:10]]}
    if args.format == "csv":
        rec["counterexamples"] = ";".join(f"{a}:{b}" for a, b, *_ in chk.counterexamples[:10])
    return [rec], tuple(rec.keys()), 0


def _cmd_zeros(args):
    chk = zero_indices_check(_params(args), args.modulus, args.limit or 100,
                             state_budget=args.budget or DEFAULT_STATE_BUDGET)
    rec = {"A": args.A, "B": args.B, "m": args.modulus, "limit": chk.limit,
           "alpha": chk.alpha, "holds": chk.holds,
           "first_violation": chk.first_violation}
    return [rec], tuple(rec.keys()), 0


def _cmd_bound(args):
    rep = trailing_zeros_report(_params(args), args.modulus, args.limit or 200,
                                digit_budget=args.budget or DEFAULT_DIGIT_BUDGET)
    records = [{"A": args.A, "B": args.B, "base": rep.base, "n": n, "z": z}
               for n, z in rep.samples]
    print(f"max z(n)/log2(n) = {rep.max_ratio}", file=sys.stderr)
    return records, ("A", "B", "base", "n", "z"), 0


def _cmd_identities(args):
    params = _params(args)
    records = []

    def add(check: str, case: str, holds: bool, detail: str = "") -> None:
        records.append({"A": args.A, "B": args.B, "check": check, "case": case,
                        "holds": holds, "detail": detail})

    for a in range(1, 9):
        for n in range(1, 13):
            res = multiplication_formula_check(params, a, n)
            if not res.holds:
                add("multiplication_formula", f"a={a} n={n}", False,
                    f"lhs={res.lhs} rhs={res.rhs}")
    add("multiplication_formula", "a<=8 n<=12",
        not any(r["check"] == "multiplication_formula" for r in records))
    for p in (3, 5, 7, 9):
        bad = next((n for n in range(1, 16)
                    if not det_power_identity_check(params, p, n).holds), None)
        add("det_power_identity", f"p={p} n<=15", bad is None,
            "" if bad is None else f"fails at n={bad}")
    bad = next(((a, n) for a in range(1, 7) for n in range(1, 13)
                if not period_step_congruence(params, a, n).holds), None)
    add("period_step_congruence", "a<=6 n<=12", bad is None,
        "" if bad is None else f"fails at (a, n)={bad}")
    if params.coprime_AB:
        holds, first = gcd_companion_check(params, 30)
        add("gcd_companion", "n<=30", holds, "" if holds else f"fails at n={first}")
    bad = next((n for n in range(1, 41)
                if cassini_value(params, n) != (-1) ** n * params.B ** (n - 1)), None)
    add("cassini_sign_law", "n<=40", bad is None,
        "" if bad is None else f"fails at n={bad}")
    exit_code = 0 if all(r["holds"] for r in records) else 1
    return records, ("A", "B", "check", "case", "holds", "detail"), exit_code


def _parse_range(text: str) -> list[int]:
    """Parse '2..5' (inclusive) or '2,3,7' into an integer list."""
    if ".." in text:
        lo, _, hi = text.partition("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",") if x.strip() != ""]


def _open_out(path: str | None):
    if path is None:
        return nullcontext(sys.stdout)
    return open(path, "w", newline="")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (LucasLabError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "wss":
        params = RecurrenceParams(args.A, args.B)
        findings = wss_scan(params, args.limit or 1000,
                            state_budget=args.budget or DEFAULT_STATE_BUDGET)
        with _open_out(args.out) as sink:
            write_wss(findings, sink, args.format)
        return 0
    if args.command == "atlas":
        rows = atlas_rows(_parse_range(args.A_range), _parse_range(args.B_range),
                          _parse_range(args.m_range),
                          state_budget=args.budget or DEFAULT_STATE_BUDGET)
        with _open_out(args.out) as sink:
            write_atlas(rows, sink, args.format)
        return 0
    if args.command == "verify":
        if args.config:
            with open(args.config) as fh:
                config = parse_config(fh.read())
        else:
            config = VerifyConfig()
        records, summary = run_verification(config)
        recs = [{"suite": r.suite, "case": r.case, "holds": r.holds,
                 "classification": r.classification, "detail": r.detail}
                for r in records]
        recs.append({"suite": "summary", "case": "", "holds": summary.ok,
                     "classification": "summary",
                     "detail": f"records={summary.records};passed={summary.passed};"
                               f"failed={summary.failed};"
                               f"known_exceptions={summary.known_exceptions}"})
        with _open_out(args.out) as sink:
            _emit(recs, ("suite", "case", "holds", "classification", "detail"),
                  args.format, sink)
        return 0 if summary.ok else 1

    handler = _HANDLERS[args.command]
    records, fields, code = handler(args)
    with _open_out(args.out) as sink:
        _emit(records, fields, args.format, sink)
    return code


_HANDLERS = {
    "term": _cmd_term,
    "term-mod": _cmd_term_mod,
    "period": _cmd_period,
    "cycle": _cmd_cycle,
    "rank": _cmd_rank,
    "period-law": _cmd_period_law,
    "squares-law": _cmd_squares_law,
    "repetition": _cmd_repetition,
    "square-div": _cmd_square_div,
    "power-div": _cmd_power_div,
    "div-seq": _cmd_div_seq,
    "zeros": _cmd_zeros,
    "bound": _cmd_bound,
    "identities": _cmd_identities,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lucaslab",
        description="Arithmetic of second-order recurrences e(n) = A*e(n-1) + B*e(n-2), "
                    "seeds 0, 1: exact terms, periods, ranks, divisibility laws, "
                    "congruence identities, and Wall-Sun-Sun-analogue scans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json",
                        help="output format (default json lines)")
    common.add_argument("--out", metavar="PATH", default=None,
                        help="write output to PATH (default stdout)")
    common.add_argument("--budget", type=int, default=None,
                        help="override the scan/exact-term budget")

    ab = argparse.ArgumentParser(add_help=False)
    ab.add_argument("-A", type=int, required=True, help="coefficient A")
    ab.add_argument("-B", type=int, required=True, help="coefficient B (nonzero)")

    def cmd(name: str, help_text: str, *, parents=(), **kwargs):
        return sub.add_parser(name, help=help_text, parents=[common, *parents], **kwargs)

    p = cmd("term", "exact term e(n)", parents=[ab])
    p.add_argument("-n", "--index", dest="n", type=int, required=True)

    p = cmd("term-mod", "e(n) mod m via 2x2 matrix power", parents=[ab])
    p.add_argument("-n", "--index", dest="n", type=int, required=True)
    p.add_argument("-m", "--modulus", dest="modulus", type=int, required=True)

    for name, help_text in (("period", "pure period k(m) (requires gcd(B, m) = 1)"),
                            ("cycle", "tail and cycle of the pair sequence mod m"),
                            ("rank", "rank of apparition alpha(m)")):
        p = cmd(name, help_text, parents=[ab])
        p.add_argument("-m", "--modulus", dest="modulus", type=int, required=True)

    for name, help_text in (("period-law", "period ladder k(p^e) and the scaling law"),
                            ("squares-law", "period ladder of the squared sequence")):
        p = cmd(name, help_text, parents=[ab])
        p.add_argument("--p", type=int, required=True, help="prime p (not dividing B)")
        p.add_argument("--e", type=int, default=3, help="largest exponent (default 3)")

    p = cmd("repetition", "law of repetition at a prime", parents=[ab])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--limit", type=int, default=None, help="index scan bound")

    p = cmd("square-div", "e(n)^2 | e(n*m) iff e(n) | m, for m up to --limit", parents=[ab])
    p.add_argument("-n", "--index", dest="n", type=int, required=True)
    p.add_argument("--limit", type=int, default=None, help="m_max (default 30)")

    p = cmd("power-div", "e(n)^(k+1) | e(n*e(n)^k) for k up to --limit", parents=[ab])
    p.add_argument("-n", "--index", dest="n", type=int, required=True)
    p.add_argument("--limit", type=int, default=None, help="k_max (default 2)")

    p = cmd("div-seq", "e(a) | e(b) iff a | b over an index rectangle", parents=[ab])
    p.add_argument("--a-max", dest="a_max", type=int, default=15)
    p.add_argument("--b-max", dest="b_max", type=int, default=60)

    p = cmd("zeros", "zero indices mod m form the multiples of alpha", parents=[ab])
    p.add_argument("-m", "--modulus", dest="modulus", type=int, required=True)
    p.add_argument("--limit", type=int, default=None, help="largest index checked (default 100)")

    p = cmd("bound", "trailing-zero counts in base m with the log-ratio bound", parents=[ab])
    p.add_argument("-m", "--modulus", dest="modulus", type=int, required=True,
                   help="the base the terms are written in")
    p.add_argument("--limit", type=int, default=None, help="largest index (default 200)")

    cmd("identities", "run the exact identity checks for one (A, B)", parents=[ab])

    p = cmd("wss", "scan primes for k(p^2) = k(p)", parents=[ab])
    p.add_argument("--limit", type=int, default=None, help="scan primes <= limit (default 1000)")

    p = cmd("atlas", "bulk cycle/rank table over parameter ranges")
    p.add_argument("--A-range", dest="A_range", required=True,
                   help="range 'lo..hi' or comma list")
    p.add_argument("--B-range", dest="B_range", required=True)
    p.add_argument("--m-range", dest="m_range", required=True)

    p = cmd("verify", "run the property-verification suites")
    p.add_argument("--config", metavar="PATH", default=None,
                   help="flat key = value config file")

    return parser


if __name__ == "__main__":
    sys.exit(main())
