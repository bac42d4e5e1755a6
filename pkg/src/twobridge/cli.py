"""Command-line interface: ``twobridge expand|slopes|verify|census``.

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import multiprocessing
import sys
from typing import Sequence

from .census import CensusError, CensusIOError, canonical_representatives, run_census
from .cf import InvalidKnotError, KnotParams, evaluate_with_shift, fold, normalize_knot
from .oracle import verify_knot
from .slopes import KnotSlopeReport, knot_report

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def report_to_dict(report: KnotSlopeReport, alpha_in: int, beta_in: int) -> dict:
    k = report.knot
    return {
        "input": {"alpha": alpha_in, "beta": beta_in},
        "alpha": k.alpha,
        "beta": k.beta,
        "m": list(report.m),
        "even": list(report.even),
        "even_shift": evaluate_with_shift(k, report.even).shift,
        "delta": report.context.delta,
        "n0_diff": report.context.n0_diff,
        "entries": [
            {
                "subtuple": list(e.subtuple),
                "expansion": None if e.expansion is None else list(e.expansion),
                "signed_diff": e.signed_diff,
                "slope": e.slope,
            }
            for e in report.entries
        ],
        "slopes": [[s, c] for s, c in report.slope_counts()],
        "collisions": {str(s): [list(t) for t in ts] for s, ts in report.collisions.items()},
    }


def render_json(d: dict) -> str:
    return json.dumps(d) + "\n"


def _fmt_tuple(t: Sequence[int]) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def _fmt_list(n: Sequence[int]) -> str:
    return "[" + ",".join(map(str, n)) + "]"


def render_text(d: dict, show_expansions: bool) -> str:
    lines = [
        f"K({d['alpha']},{d['beta']})  input ({d['input']['alpha']},{d['input']['beta']})",
        f"M     = {_fmt_list(d['m'])}",
        f"even  = {_fmt_list(d['even'])}  shift {d['even_shift']}",
        f"delta = {d['delta']}  n0_diff = {d['n0_diff']}",
        "",
    ]
    rows = [("subtuple", "expansion", "signed_diff", "slope")] if show_expansions \
        else [("subtuple", "signed_diff", "slope")]
    for e in d["entries"]:
        cells = [_fmt_tuple(e["subtuple"])]
        if show_expansions:
            cells.append(_fmt_list(e["expansion"]))
        cells += [str(e["signed_diff"]), str(e["slope"])]
        rows.append(tuple(cells))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        left = 2 if show_expansions else 1
        lines.append("  ".join(c.ljust(w) if i < left else c.rjust(w)
                               for i, (c, w) in enumerate(zip(r, widths))).rstrip())
    lines.append("")
    lines.append("slopes: " + " ".join(f"{s}x{c}" if c > 1 else str(s) for s, c in d["slopes"]))
    if d["collisions"]:
        groups = "; ".join(f"{s}: " + " ".join(_fmt_tuple(t) for t in ts) for s, ts in d["collisions"].items())
        lines.append(f"repeated: {groups}")
    else:
        lines.append("repeated: none")
    return "\n".join(lines) + "\n"


def render_rows(d: dict, fmt: str) -> str:
    if fmt == "jsonl":
        return "".join(json.dumps(e) + "\n" for e in d["entries"])
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["subtuple", "expansion", "signed_diff", "slope"])
    for e in d["entries"]:
        exp = "" if e["expansion"] is None else " ".join(map(str, e["expansion"]))
        w.writerow([" ".join(map(str, e["subtuple"])), exp, e["signed_diff"], e["slope"]])
    return buf.getvalue()


def resolve_knot(alpha: int, beta: int, canonical: bool = False) -> KnotParams:
    """Knot to report on: beta as entered, mirrored into (0, alpha/2) if needed.

    With ``canonical`` the census representative of the class is used instead.
    """
    knot = normalize_knot(alpha, beta)
    if canonical:
        return knot
    return KnotParams(alpha, fold(alpha, beta))


def _knot_command(args, mode: str) -> int:
    try:
        knot = resolve_knot(args.alpha, args.beta, args.canonical)
    except InvalidKnotError as exc:
        raise UsageError(str(exc)) from exc
    d = report_to_dict(knot_report(knot, mode=mode), args.alpha, args.beta)
    if args.format == "json":
        out = render_json(d)
    elif args.format == "text":
        out = render_text(d, show_expansions=mode == "full")
    else:
        out = render_rows(d, args.format)
    sys.stdout.write(out)
    return EXIT_OK


def cmd_expand(args) -> int:
    return _knot_command(args, "full")


def cmd_slopes(args) -> int:
    return _knot_command(args, args.mode)


def _verify_alpha(alpha: int) -> tuple[int, int, str | None]:
    knots = checks = 0
    for knot in canonical_representatives(alpha):
        n, failure = verify_knot(knot)
        knots += 1
        checks += n
        if failure:
            return knots, checks, failure
    return knots, checks, None


def cmd_verify(args) -> int:
    if args.max_alpha < 3:
        raise UsageError("max-alpha must be at least 3")
    alphas = range(3, args.max_alpha + 1, 2)
    knots = checks = 0
    failure = None
    pool = multiprocessing.Pool(args.workers) if args.workers > 1 else None
    try:
        results = pool.imap(_verify_alpha, alphas) if pool else map(_verify_alpha, alphas)
        for k, c, f in results:
            knots += k
            checks += c
            if f:
                failure = f
                break
    finally:
        if pool:
            pool.terminate()
            pool.join()
    if failure:
        print(f"FAIL after {knots} knots: {failure}")
        return EXIT_VERIFY
    print(f"PASS: {knots} knots with alpha <= {args.max_alpha}, {checks} expansions checked")
    return EXIT_OK


def cmd_census(args) -> int:
    if args.min_alpha < 3 or args.max_alpha < args.min_alpha:
        raise UsageError("need 3 <= min-alpha <= max-alpha")
    fmt = args.format
    if fmt is None:
        fmt = "jsonl" if args.out.endswith((".jsonl", ".json")) else "csv"
    if fmt not in ("csv", "jsonl"):
        raise UsageError("census format must be csv or jsonl")
    try:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            summary = run_census(args.min_alpha, args.max_alpha, workers=args.workers, sink=fh, fmt=fmt)
    except CensusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (CensusIOError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(json.dumps(summary))
    return EXIT_OK


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twobridge", description="Boundary slopes of 2-bridge knots.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (
        ("expand", cmd_expand, "list every expansion M_I with its slope"),
        ("slopes", cmd_slopes, "slope multiset and repeated slopes"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--alpha", type=int, required=True)
        p.add_argument("--beta", type=int, required=True)
        p.add_argument("--format", choices=["text", "json", "csv", "jsonl"], default="text")
        p.add_argument("--canonical", action="store_true",
                       help="use the census representative (minimal beta over beta^-1 and mirrors)")
        if name == "slopes":
            p.add_argument("--mode", choices=["full", "fast"], default="fast")
        p.set_defaults(func=fn)

    p = sub.add_parser("verify", help="check every canonical knot up to max-alpha against the oracle")
    p.add_argument("--max-alpha", type=int, required=True)
    p.add_argument("--workers", type=_positive, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="slope census over a range of alpha")
    p.add_argument("--min-alpha", type=int, default=3)
    p.add_argument("--max-alpha", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=["csv", "jsonl"], default=None)
    p.add_argument("--workers", type=_positive, default=1)
    p.set_defaults(func=cmd_census)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
