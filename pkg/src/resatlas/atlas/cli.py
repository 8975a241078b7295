"""`atlas` command line: enum, verify, series, dump.

Exit status: 0 on success, 1 when a verification or table diff fails,
2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .cache import code_version, load_components
from .diff import diff_a22, diff_a3, diff_a4
from .render import dump, records_csv, records_markdown, series
from .suites import SUITES, jordan_checks, membership_checks, run_suite

HARD_CAP = 7
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _check_cap(i: int, cap: int) -> None:
    if i < 1:
        raise UsageError("i must be at least 1")
    if i > cap:
        raise UsageError(f"i = {i} exceeds the cap {cap} (raise it with --cap)")


def cmd_enum(args) -> int:
    _check_cap(args.i, args.cap)
    if args.j is not None and not 1 <= args.j <= args.i:
        raise UsageError("need 1 <= j <= i")
    js = [args.j] if args.j is not None else list(range(1, args.i + 1))
    records, diffs = [], []
    for j in js:
        recs = load_components(args.i, j, use_cache=not args.no_cache)
        records.extend(recs)
        for d in (diff_a22(recs, args.i, j), diff_a3(recs, args.i, j)):
            if d is not None:
                diffs.append(d)
    if args.i == 6 and args.j is None:
        diffs.append(diff_a4(records))
    if args.verify in ("membership", "full"):
        for r, c in zip(records, membership_checks(args.i, records=records, seed=args.seed)):
            if not c["pass"]:
                # a non-member would refute the construction: stop and hand over the evidence
                _emit({"aborted": True, "label": r.label, "counterexample": c["counterexample"]})
                return EXIT_FAIL
            r.mark("membership:verified")
    if args.verify == "full":
        for r, c in zip(records, jordan_checks(args.i, records=records, seed=args.seed)):
            r.mark("jordan:verified" if c["pass"] else "jordan:failed")
    truncated = args.budget is not None and len(records) > args.budget
    shown = records[: args.budget] if truncated else records
    failed = any(not d["ok"] for d in diffs) or any(f.endswith(":failed") for r in records for f in r.flags)
    if args.format == "json":
        _emit({
            "i": args.i, "j": args.j, "seed": args.seed, "version": code_version(),
            "count": len(records), "truncated": truncated,
            "records": [r.to_json() for r in shown],
            "diffs": diffs,
        })
    else:
        text = records_csv(shown) if args.format == "csv" else records_markdown(shown)
        sys.stdout.write(text)
        if truncated:
            sys.stdout.write(f"# TRUNCATED: showing {len(shown)} of {len(records)} records\n")
        for d in diffs:
            status = "ok" if d["ok"] else "DIFF"
            sys.stderr.write(f"table {d['table']} i={d['i']} j={d.get('j', '*')}: {status}\n")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_verify(args) -> int:
    _check_cap(args.i_max, args.cap)
    report = run_suite(args.suite, i_max=args.i_max, seed=args.seed, use_cache=not args.no_cache)
    if not args.full:
        report = {k: v for k, v in report.items() if k != "checks"}
    _emit(report)
    return EXIT_OK if report["pass"] else EXIT_FAIL


def cmd_series(args) -> int:
    try:
        out = series(args.label, args.m, args.scheme)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc).strip("'\"")) from None
    _emit(out)
    return EXIT_OK


def cmd_dump(args) -> int:
    if args.object in ("matrix", "dsystem", "hsystem"):
        if args.m is None or args.m < 2:
            raise UsageError(f"dump {args.object} needs --m >= 2")
    elif args.alpha is None or args.alpha < 2:
        raise UsageError("dump odd needs --alpha >= 2")
    sys.stdout.write(dump(args.object, m=args.m, alpha=args.alpha, n=args.n) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="atlas", description="Components of the resultantal varieties X(m, i).")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enum", help="enumerate Irr(i, j) and diff against the reference tables")
    e.add_argument("--i", type=int, required=True)
    e.add_argument("--j", type=int)
    e.add_argument("--format", choices=("json", "csv", "markdown"), default="json")
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--verify", choices=("formulas", "membership", "full"), default="formulas")
    e.add_argument("--budget", type=int, help="emit at most this many records")
    e.add_argument("--cap", type=int, default=HARD_CAP)
    e.add_argument("--no-cache", action="store_true")
    e.set_defaults(func=cmd_enum)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--i-max", type=int, default=5)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--cap", type=int, default=HARD_CAP)
    v.add_argument("--full", action="store_true", help="include every check, not only failures")
    v.add_argument("--no-cache", action="store_true")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("series", help="the member C_ijk(m) of a component series")
    s.add_argument("--label", required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--scheme", choices=("table", "atlas"), default="table",
                   help="read the label in the reference-table numbering or the atlas numbering")
    s.set_defaults(func=cmd_series)

    d = sub.add_parser("dump", help="canonical text of matrices and coefficient systems")
    d.add_argument("object", choices=("matrix", "dsystem", "hsystem", "odd"))
    d.add_argument("--m", type=int)
    d.add_argument("--alpha", type=int)
    d.add_argument("--n", type=int, default=1)
    d.set_defaults(func=cmd_dump)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"atlas: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
