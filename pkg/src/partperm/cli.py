"""Command-line front end.

    partperm count --lambda 2,1 --r 3
    partperm g-lambda --lambda 3 --r 4
    partperm pr-expand --n 4 --r 3
    partperm mnr --n 2 --r 3
    partperm verify --max-n 4 --max-r 6

JSON goes to stdout, diagnostics to stderr. Exit codes: 0 success,
1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from .algebra import GroupAlgebraElement
from .combinatorics import Partition, representative
from .errors import InternalMismatch, NonIntegerResult, PartpermError
from .star import biane_m_formula, count_brute, count_gj, g_lambda, pr_class_expansion
from .verify import run_suite

log = logging.getLogger("partperm")

BRUTE_MAX_N = 6
BRUTE_MAX_R = 8


class UsageError(Exception):
    pass


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partperm", description="Exact transitive star factorization counts and class expansions.")
    parser.add_argument("--format", choices=("json", "tsv"), default="json")
    parser.add_argument("-v", "--verbose", action="store_true", help="diagnostics on stderr")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("count", help="transitive star factorizations of a type-lambda permutation")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--r", type=_nonneg, required=True)

    p = sub.add_parser("g-lambda", help="coefficient of alpha_lambda in p_r(xi)")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--r", type=_nonneg)
    group.add_argument("--r-max", type=_nonneg, help="print every r in 0..R_MAX")
    p.add_argument("--trunc", type=_nonneg, help="series truncation order (default 2*r_max+2)")

    p = sub.add_parser("pr-expand", help="class expansion of p_r(X_1..X_n)")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--r", type=_positive, required=True)

    p = sub.add_parser("mnr", help="class expansion of Biane's M_n^r")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--r", type=_positive, required=True)

    p = sub.add_parser("verify", help="run the identity suite over a grid")
    p.add_argument("--max-n", type=_positive, default=4)
    p.add_argument("--max-r", type=_positive, default=6)
    p.add_argument("--trunc", type=_nonneg, default=14)

    for sp in sub.choices.values():
        sp.add_argument("--format", choices=("json", "tsv"), default=argparse.SUPPRESS)
        sp.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)
    return parser


def _class_rows(x: GroupAlgebraElement) -> list[dict]:
    return [{"class": list(mu), "coeff": str(c)} for mu, c in x.class_expansion().items()]


def _cmd_count(args) -> dict:
    if not args.lam:
        raise UsageError("--lambda must be a nonempty partition")
    count = count_gj(args.lam, args.r)
    brute = None
    if args.lam.weight <= BRUTE_MAX_N and args.r <= BRUTE_MAX_R:
        brute = count_brute(representative(args.lam), args.r)
        if brute != count:
            raise InternalMismatch(f"formula gives {count} but enumeration gives {brute}")
    else:
        log.info("skipping brute-force cross-check for |lambda|=%d, r=%d", args.lam.weight, args.r)
    return {"lambda": list(args.lam), "r": args.r, "count": str(count), "brute": None if brute is None else str(brute)}


def _cmd_g_lambda(args) -> dict | list:
    if not args.lam:
        raise UsageError("--lambda must be a nonempty partition")
    rs = [args.r] if args.r is not None else list(range(args.r_max + 1))
    order = args.trunc if args.trunc is not None else 2 * max(rs) + 2
    if order < max(rs):
        raise UsageError(f"--trunc {order} is below r={max(rs)}")
    rows = [{"lambda": list(args.lam), "r": r, "g": str(g_lambda(args.lam, r, order))} for r in rs]
    return rows[0] if args.r is not None else rows


def _emit(data, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(data) + "\n")
        return
    rows = data if isinstance(data, list) else [data]
    if not rows:
        return
    keys = list(rows[0])
    out.write("\t".join(keys) + "\n")
    for row in rows:
        cells = []
        for k in keys:
            v = row[k]
            if isinstance(v, list):
                v = ",".join(map(str, v))
            cells.append("" if v is None else str(v))
        out.write("\t".join(cells) + "\n")


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr, format="%(message)s")

    try:
        if args.subcommand == "count":
            data = _cmd_count(args)
        elif args.subcommand == "g-lambda":
            data = _cmd_g_lambda(args)
        elif args.subcommand == "pr-expand":
            data = _class_rows(pr_class_expansion(args.r, args.n))
        elif args.subcommand == "mnr":
            data = _class_rows(biane_m_formula(args.n, args.r))
        else:
            results = run_suite(args.max_n, args.max_r, args.trunc)
            ok = all(r.passed for r in results)
            data = {
                "max_n": args.max_n,
                "max_r": args.max_r,
                "trunc": args.trunc,
                "all_passed": ok,
                "checks": [r.to_json() for r in results],
            }
            if args.format == "json":
                _emit(data, "json", out)
            else:
                rows = [{"name": r.name, "cases": r.cases, "status": "pass" if r.passed else "fail", "detail": r.detail} for r in results]
                _emit(rows, "tsv", out)
            for r in results:
                if not r.passed:
                    log.error("FAIL %s: %s", r.name, r.detail)
            return 0 if ok else 1
    except (InternalMismatch, NonIntegerResult) as exc:
        print(f"partperm: verification failure: {exc}", file=sys.stderr)
        return 1
    except (UsageError, PartpermError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"partperm: error: {exc}", file=sys.stderr)
        return 2

    _emit(data, args.format, out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
