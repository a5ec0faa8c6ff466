"""Command-line interface: ``sl2coh <command> [flags]``.

Exit status is 0 when everything checked out, 1 when a verification
found violations and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys

from .carlson import SimpleLabel, dim_ext_finite, generic_stabilization_probe
from .ext import dim_ext, ext3_closed, specht_dim
from .report import ExitStatus, RunReport, to_csv, to_json
from .systems import (
    SystemQuery,
    closed_form_N,
    count_N,
    count_N_bruteforce,
    count_N_sum_form,
    count_N_weighted,
    enumerate_solutions,
)
from .verify import SCALES, SUITES, run_suite
from .weyl import dim_B_cohomology, dim_weyl_cohomology


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """``"5"`` or ``"lo..hi"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or lo..hi, got {text!r}")
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def parse_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def _tup(xs) -> str:
    return " ".join(map(str, xs))


def cmd_nsol(args) -> RunReport:
    rep = RunReport("nsol", {"m": args.m, "n": args.n, "p": args.p, "method": args.method})
    if args.weights is not None:
        if args.method != "brute":
            raise UsageError("--weights is only supported with --method brute")
        dim = count_N_weighted(args.m, args.n, args.p, args.weights)
        q = SystemQuery(args.m, args.n, args.p, weights=args.weights[: len(args.weights)])
    elif args.method == "brute":
        dim = count_N_bruteforce(args.m, args.n, args.p, args.r)
        q = SystemQuery(args.m, args.n, args.p, args.r)
    else:
        if args.r is not None:
            raise UsageError("--r only applies to --method brute")
        fn = {"recursive": count_N, "sum": count_N_sum_form, "closed": closed_form_N}[args.method]
        dim = fn(args.m, args.n, args.p)
        q = None
    rep.rows.append({"p": args.p, "m": args.m, "n": args.n, "dim": dim})
    if args.list:
        if q is None:
            q = SystemQuery(args.m, args.n, args.p)
        rep.rows = [{"p": args.p, "m": args.m, "n": args.n, "b": _tup(s.b), "a": _tup(s.a)}
                    for s in enumerate_solutions(q)]
        rep.summary["dim"] = dim
    return rep


def cmd_weyl(args) -> RunReport:
    rep = RunReport("weyl", {"p": args.p})
    for n in args.n:
        for m in args.m:
            rep.rows.append({"p": args.p, "n": n, "m": m, "dim": dim_weyl_cohomology(n, m, args.p)})
    return rep


def cmd_bcoh(args) -> RunReport:
    rep = RunReport("bcoh", {"p": args.p})
    for n in args.n:
        for m in args.m:
            rep.rows.append({"p": args.p, "n": n, "m": m, "dim": dim_B_cohomology(n, m, args.p)})
    return rep


def cmd_ext(args) -> RunReport:
    rep = RunReport("ext", {"p": args.p})
    for n in args.n:
        for m1 in args.m1:
            for m2 in args.m2:
                rep.rows.append({"p": args.p, "n": n, "m1": m1, "m2": m2,
                                 "dim": dim_ext(n, m2, m1, args.p)})
    return rep


def cmd_ext3(args) -> RunReport:
    rep = RunReport("ext3", {"p": args.p})
    for m1 in args.m1:
        for m2 in args.m2:
            rep.rows.append({"p": args.p, "n": 3, "m1": m1, "m2": m2,
                             "dim": ext3_closed(m2, m1, args.p)})
    return rep


def cmd_specht(args) -> RunReport:
    rep = RunReport("specht", {"p": args.p})
    for n in args.n:
        rep.rows.append({"p": args.p, "n": n, "lambda1": args.lambda1, "lambda2": args.lambda2,
                         "dim": specht_dim(n, args.lambda1, args.lambda2, args.p)})
    return rep


def cmd_finite(args) -> RunReport:
    f = SimpleLabel(args.p, args.s, args.f)
    d = SimpleLabel(args.p, args.s, args.d) if args.d is not None else SimpleLabel.zero(args.p, args.s)
    rep = RunReport("finite", {"p": args.p, "s": args.s})
    for n in args.n:
        rep.rows.append({"p": args.p, "s": args.s, "n": n, "d": _tup(d.weights), "f": _tup(f.weights),
                         "dim": dim_ext_finite(n, d, f)})
    return rep


def cmd_probe(args) -> RunReport:
    rep = RunReport("probe-stabilization", {"p": args.p})
    for n in args.n:
        part = generic_stabilization_probe(n, args.m, args.p, args.s_min, args.s_max)
        flag = int(part.summary["tail_constant"])
        rep.rows.extend(dict(row, tail_constant=flag) for row in part.rows)
    return rep


def cmd_verify(args) -> RunReport:
    rep = run_suite(args.suite, args.scale, args.threads)
    rep.rows = [dict({"suite": args.suite, "scale": args.scale}, **rep.summary)]
    return rep


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--threads", type=int, default=1, help="worker processes for sweeps")

    ap = argparse.ArgumentParser(prog="sl2coh", description="Cohomology dimensions for SL2 and SL2(p^s).")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("nsol", parents=[common], help="solution count N(m, n)")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--method", choices=("brute", "recursive", "sum", "closed"), default="recursive")
    s.add_argument("--r", type=int, help="vector length for --method brute")
    s.add_argument("--weights", type=parse_list, help="d_1,...,d_r for the weighted system")
    s.add_argument("--list", action="store_true", help="list every solution (b, a)")
    s.set_defaults(func=cmd_nsol)

    for name, func, text in (("weyl", cmd_weyl, "dim H^n(G, V(m))"), ("bcoh", cmd_bcoh, "dim H^n(B, -m)")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("--p", type=int, required=True)
        s.add_argument("--n", type=parse_range, required=True)
        s.add_argument("--m", type=parse_range, required=True)
        s.set_defaults(func=func)

    s = sub.add_parser("ext", parents=[common], help="dim Ext^n(V(m2), V(m1))")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--n", type=parse_range, required=True)
    s.add_argument("--m1", type=parse_range, required=True)
    s.add_argument("--m2", type=parse_range, required=True)
    s.set_defaults(func=cmd_ext)

    s = sub.add_parser("ext3", parents=[common], help="Ext^3 by the degree-three case list")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--m1", type=parse_range, required=True)
    s.add_argument("--m2", type=parse_range, required=True)
    s.set_defaults(func=cmd_ext3)

    s = sub.add_parser("specht", parents=[common], help="Specht module cohomology, two-part partitions")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--n", type=parse_range, required=True)
    s.add_argument("--lambda1", type=int, required=True)
    s.add_argument("--lambda2", type=int, required=True)
    s.set_defaults(func=cmd_specht)

    s = sub.add_parser("finite", parents=[common], help="dim Ext^n over SL2(p^s) between simple modules")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--s", type=int, required=True)
    s.add_argument("--n", type=parse_range, required=True)
    s.add_argument("--f", type=parse_list, required=True, help="target label f_1,...,f_s")
    s.add_argument("--d", type=parse_list, help="source label (default: trivial module)")
    s.set_defaults(func=cmd_finite)

    s = sub.add_parser("probe-stabilization", parents=[common], help="H^n(SL2(p^s), L(m)) as s grows")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--n", type=parse_range, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--s-min", type=int, default=2)
    s.add_argument("--s-max", type=int, default=5)
    s.set_defaults(func=cmd_probe)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", choices=sorted(SUITES))
    s.add_argument("--scale", choices=SCALES, default="quick")
    s.add_argument("--show-violations", type=int, default=20, metavar="K",
                   help="print up to K violation records to stderr")
    s.set_defaults(func=cmd_verify)
    return ap


def emit(rows, fmt: str, out=None) -> None:
    out = out or sys.stdout
    out.write(to_json(rows) + "\n" if fmt == "json" else to_csv(rows))


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return ExitStatus.USAGE_ERROR if e.code else ExitStatus.OK
    if args.threads < 1:
        print("usage error: --threads must be >= 1", file=sys.stderr)
        return ExitStatus.USAGE_ERROR
    try:
        rep = args.func(args)
    except (UsageError, ValueError, KeyError) as e:
        msg = e.args[0] if e.args else str(e)
        print(f"usage error: {msg}", file=sys.stderr)
        return ExitStatus.USAGE_ERROR
    emit(rep.rows, args.format)
    if rep.violations:
        k = getattr(args, "show_violations", 20)
        print(f"{len(rep.violations)} violation(s)", file=sys.stderr)
        if k:
            emit(rep.violations[:k], args.format, sys.stderr)
    return rep.exit_status


if __name__ == "__main__":
    sys.exit(main())
