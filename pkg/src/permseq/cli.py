"""``permseq`` command line.

Exit codes: 0 success, 1 engine error or failed verification, 2 usage error.
Diagnostics go to stderr; stdout carries only the requested output.
"""
from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import matrix_core as mc
from . import permanent_engines as pe
from .determinant_engine import DeterminantMethod, determinant
from .errors import DomainError
from .permanent_engines import PermanentMethod
from .sequences import SequenceKind, term_range
from .verify import SUITES, run_suite

FORMATS = ("plain", "csv", "json")


class UsageError(Exception):
    """Bad flags detected after argparse has accepted them."""


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _method_list(text: str) -> list[str]:
    methods = [t.strip() for t in text.split(",") if t.strip()]
    valid = {m.value for m in PermanentMethod}
    bad = [m for m in methods if m not in valid]
    if bad or not methods:
        raise argparse.ArgumentTypeError(
            f"unknown method(s) {', '.join(bad) or '(none)'}; choose from {', '.join(sorted(valid))}")
    return methods


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", choices=[f.value for f in mc.FamilyKind])
    src.add_argument("--file", type=Path, help="matrix as JSON ({rows, cols, entries}) or CSV")
    p.add_argument("--n", type=int, help="order of the family member (with --family)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permseq",
        description="Jacobsthal numbers as permanents and determinants of banded matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="print a range of sequence terms")
    p.add_argument("kind", choices=[k.value for k in SequenceKind])
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="plain")

    p = sub.add_parser("matrix", help="print a member of a matrix family")
    p.add_argument("--family", choices=[f.value for f in mc.FamilyKind], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="plain")

    p = sub.add_parser("permanent", help="exact permanent of a family member or matrix file")
    _add_input(p)
    p.add_argument("--method", choices=[m.value for m in PermanentMethod], default="ryser")
    p.add_argument("--trace", action="store_true", help="also emit the contraction trace")
    p.add_argument("--format", choices=FORMATS, default="plain")

    p = sub.add_parser("det", help="exact determinant of a family member or matrix file")
    _add_input(p)
    p.add_argument("--method", choices=[m.value for m in DeterminantMethod], default="bareiss")
    p.add_argument("--format", choices=FORMATS, default="plain")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--engine", choices=[m.value for m in PermanentMethod], default="contraction")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--format", choices=FORMATS, default="plain")

    p = sub.add_parser("bench", help="time permanent engines on a matrix family")
    p.add_argument("--methods", type=_method_list, required=True)
    p.add_argument("--family", choices=[f.value for f in mc.FamilyKind], default="H")
    p.add_argument("--n", type=_int_list, required=True)
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--format", choices=FORMATS, default="csv")
    return parser


def _load_matrix(args) -> mc.Matrix:
    if args.family is not None:
        if args.n is None:
            raise UsageError("--n is required with --family")
        if args.n < 1:
            raise UsageError(f"--n must be >= 1, got {args.n}")
        return mc.build(args.family, args.n)
    try:
        text = args.file.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    if text.lstrip().startswith("{"):
        return mc.matrix_from_json(text)
    return mc.matrix_from_csv(text)


def _emit(out, text: str) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _dumps(doc) -> str:
    return json.dumps(doc, sort_keys=False)


def cmd_seq(args, out) -> int:
    if args.start < 0 or args.stop < args.start:
        raise UsageError(f"invalid index range --from {args.start} --to {args.stop}")
    values = term_range(args.kind, args.start, args.stop)
    if args.format == "json":
        _emit(out, _dumps({"kind": args.kind, "from": args.start, "to": args.stop,
                           "terms": [str(v) for v in values]}))
    elif args.format == "csv":
        _emit(out, ",".join(map(str, values)))
    else:
        _emit(out, "\n".join(map(str, values)))
    return 0


def cmd_matrix(args, out) -> int:
    if args.n < 1:
        raise UsageError(f"--n must be >= 1, got {args.n}")
    X = mc.build(args.family, args.n)
    if args.format == "json":
        _emit(out, _dumps(mc.matrix_to_json(X)))
    elif args.format == "csv":
        _emit(out, mc.matrix_to_csv(X))
    else:
        _emit(out, str(X))
    return 0


def cmd_permanent(args, out) -> int:
    X = _load_matrix(args)
    trace = None
    if args.trace and args.method != PermanentMethod.CONTRACTION.value:
        raise UsageError("--trace is only available with --method contraction")
    if args.method == PermanentMethod.CONTRACTION.value:
        trace = pe.contraction_chain(X)
        value = trace.value
    else:
        value = pe.permanent(X, args.method)
    if args.format == "json":
        doc = {"method": args.method, "value": str(value)}
        if args.trace:
            doc["trace"] = trace.to_json()
        _emit(out, _dumps(doc))
    else:
        _emit(out, str(value))
        if args.trace:
            _emit(out, _dumps(trace.to_json()))
    return 0


def cmd_det(args, out) -> int:
    X = _load_matrix(args)
    value = determinant(X, args.method)
    if args.format == "json":
        _emit(out, _dumps({"method": args.method, "value": str(value)}))
    else:
        _emit(out, str(value))
    return 0


def cmd_verify(args, out) -> int:
    if args.max_n is not None and args.max_n < 1:
        raise UsageError(f"--max-n must be >= 1, got {args.max_n}")
    names = SUITES if args.suite == "all" else (args.suite,)
    reports = [run_suite(name, args.max_n, args.engine, args.seed, args.trials) for name in names]
    passed = all(r.passed for r in reports)
    if args.format == "json":
        _emit(out, _dumps({"passed": passed, "reports": [r.to_json() for r in reports]}))
    elif args.format == "csv":
        lines = ["suite,max_n,effective_max_n,engine,checks_run,passed,fail_n,fail_expected,fail_actual,fail_engine"]
        for r in reports:
            f = r.first_failure
            fail = [str(f.n), str(f.expected), str(f.actual), f.engine] if f else ["", "", "", ""]
            lines.append(",".join([r.suite, str(r.max_n), str(r.effective_max_n), r.engine or "",
                                   str(r.checks_run), str(r.passed).lower(), *fail]))
        _emit(out, "\n".join(lines))
    else:
        _emit(out, "\n".join(r.summary() for r in reports))
    return 0 if passed else 1


def _bench_cap(method: str) -> Optional[int]:
    if method == PermanentMethod.LAPLACE.value:
        return pe.LAPLACE_CAP
    if method == PermanentMethod.RYSER.value:
        return pe.ryser_cap()
    return None


def cmd_bench(args, out, err) -> int:
    if args.repeats < 1:
        raise UsageError(f"--repeats must be >= 1, got {args.repeats}")
    for n in args.n:
        if n < 1:
            raise UsageError(f"--n values must be >= 1, got {n}")
        for method in args.methods:
            cap = _bench_cap(method)
            if cap is not None and n > cap:
                raise UsageError(f"{method} is capped at n={cap}; cannot bench n={n}")

    rows = []
    for n in args.n:
        X = mc.build(args.family, n)
        for method in args.methods:
            times = []
            for _ in range(args.repeats):
                t0 = time.perf_counter()
                value = pe.permanent(X, method)
                times.append(time.perf_counter() - t0)
            rows.append({"method": method, "n": n,
                         "median_wall_time": statistics.median(times), "value": value})

    if args.format == "json":
        _emit(out, _dumps([{**r, "value": str(r["value"])} for r in rows]))
    else:
        sep = "," if args.format == "csv" else "\t"
        lines = [sep.join(["method", "n", "median_wall_time", "value"])]
        lines += [sep.join([r["method"], str(r["n"]), f"{r['median_wall_time']:.6g}", str(r["value"])])
                  for r in rows]
        _emit(out, "\n".join(lines))

    for n in args.n:
        values = {r["value"] for r in rows if r["n"] == n}
        if len(values) > 1:
            err.write(f"permseq bench: engines disagree at n={n}: {sorted(values)}\n")
            return 1
    return 0


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "seq":
            return cmd_seq(args, out)
        if args.command == "matrix":
            return cmd_matrix(args, out)
        if args.command == "permanent":
            return cmd_permanent(args, out)
        if args.command == "det":
            return cmd_det(args, out)
        if args.command == "verify":
            return cmd_verify(args, out)
        return cmd_bench(args, out, err)
    except UsageError as exc:
        err.write(parser.format_usage())
        err.write(f"permseq {args.command}: error: {exc}\n")
        return 2
    except DomainError as exc:
        err.write(f"permseq {args.command}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
