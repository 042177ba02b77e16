"""``wheel`` command line: single quantities, tables, matrices, simulation and
the verification sweep.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from . import closed_form as cf
from .montecarlo import estimate_hitting
from .verify import run_verification
from .wheel_model import (
    CENTER,
    Peripheral,
    RationalMatrix,
    VertexId,
    WheelSpec,
    build_wheel,
    folded_matrix,
    parse_vertex,
)

APPROX_DIGITS = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # one-line diagnostic instead of the usage dump
        self.exit(2, f"{self.prog}: error: {message}\n")


def exact_str(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def approx_str(x: Fraction | int) -> str:
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = APPROX_DIGITS
        return str(+(Decimal(x.numerator) / Decimal(x.denominator)))


def approx_number(x: Fraction | int) -> float | str:
    value = float(Decimal(approx_str(x)))
    return value if math.isfinite(value) else approx_str(x)


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------

def table_rows(spec: WheelSpec) -> list[tuple[str, Fraction]]:
    p0 = Peripheral(0)
    rows: list[tuple[str, Fraction]] = []
    ells = range(1, spec.half + 1)
    rows += [(f"h(0->{l})", cf.hitting_time(spec, p0, Peripheral(l))) for l in ells]
    rows.append(("h(center->0)", cf.hitting_time(spec, CENTER, p0)))
    rows.append(("h(0->center)", cf.hitting_time(spec, p0, CENTER)))
    rows += [(f"r(0,{l})", cf.effective_resistance(spec, p0, Peripheral(l))) for l in ells]
    rows.append(("r(center,0)", cf.effective_resistance(spec, CENTER, p0)))
    rows.append(("T", Fraction(cf.spanning_tree_count(spec))))
    rows += [(f"tau(0,{l})", Fraction(cf.identified_tree_count(spec, p0, Peripheral(l)))) for l in ells]
    rows.append(("tau(center,0)", Fraction(cf.identified_tree_count(spec, CENTER, p0))))
    return rows


def render_rows(rows: Sequence[tuple[str, Fraction]], fmt: str, extra: dict | None = None) -> str:
    if fmt == "json":
        doc = dict(extra or {})
        doc["exact"] = {name: exact_str(v) for name, v in rows}
        doc["approx"] = {name: approx_number(v) for name, v in rows}
        return json.dumps(doc, separators=(",", ":"))
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["quantity", "exact", "approx"])
        for name, v in rows:
            w.writerow([name, exact_str(v), approx_str(v)])
        return buf.getvalue().rstrip("\n")
    lines = []
    for name, v in rows:
        line = f"{name} = {exact_str(v)}"
        if Fraction(v).denominator != 1:
            line += f"  (approx {approx_str(v)})"
        lines.append(line)
    return "\n".join(lines)


def emit_table(spec: WheelSpec | int, fmt: str = "text") -> str:
    spec = spec if isinstance(spec, WheelSpec) else WheelSpec(spec)
    return render_rows(table_rows(spec), fmt, {"n": spec.n})


def render_matrix(m: RationalMatrix, fmt: str, extra: dict) -> str:
    cells = [[exact_str(x) for x in row] for row in m.rows]
    if fmt == "json":
        return json.dumps({**extra, "rows": cells}, separators=(",", ":"))
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(cells)
        return buf.getvalue().rstrip("\n")
    width = max(len(c) for row in cells for c in row)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def _single(name: str, value: Fraction | int, fmt: str, fields: dict) -> str:
    if fmt == "json":
        return json.dumps({**fields, "exact": exact_str(value), "float": approx_number(value)},
                          separators=(",", ":"))
    if fmt == "csv":
        return render_rows([(name, Fraction(value))], "csv")
    return exact_str(value)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _spec(args) -> WheelSpec:
    try:
        return WheelSpec(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _vertex(text: str, spec: WheelSpec) -> VertexId:
    try:
        return parse_vertex(text, spec.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _pair(text: str, spec: WheelSpec, flag: str) -> tuple[VertexId, VertexId]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"{flag} expects two vertices like center,p0; got {text!r}")
    a, b = (_vertex(p, spec) for p in parts)
    if a == b:
        raise UsageError(f"{flag} needs two distinct vertices, got {a} twice")
    return a, b


def cmd_hitting(args) -> int:
    spec = _spec(args)
    s, t = _vertex(args.source, spec), _vertex(args.target, spec)
    value = cf.hitting_time(spec, s, t)
    print(_single(f"h({s}->{t})", value, args.format,
                  {"n": spec.n, "source": str(s), "target": str(t)}))
    return 0


def cmd_resistance(args) -> int:
    spec = _spec(args)
    a, b = _pair(args.pair, spec, "--pair")
    value = cf.effective_resistance(spec, a, b)
    print(_single(f"r({a},{b})", value, args.format, {"n": spec.n, "a": str(a), "b": str(b)}))
    return 0


def cmd_trees(args) -> int:
    spec = _spec(args)
    if args.identify:
        a, b = _pair(args.identify, spec, "--identify")
        value = cf.identified_tree_count(spec, a, b)
        name, fields = f"tau({a},{b})", {"n": spec.n, "identify": [str(a), str(b)]}
    else:
        value = cf.spanning_tree_count(spec)
        name, fields = "T", {"n": spec.n}
    print(_single(name, value, args.format, fields))
    return 0


def cmd_matrix(args) -> int:
    spec = _spec(args)
    m = cf.inverse_folded_matrix(spec) if args.inverse else folded_matrix(spec)
    print(render_matrix(m, args.format, {"n": spec.n, "matrix": "K" if args.inverse else "H"}))
    return 0


def cmd_table(args) -> int:
    print(emit_table(_spec(args), args.format))
    return 0


def cmd_simulate(args) -> int:
    spec = _spec(args)
    s, t = _vertex(args.source, spec), _vertex(args.target, spec)
    if args.walks < 2:
        raise UsageError(f"--walks must be >= 2, got {args.walks}")
    est = estimate_hitting(build_wheel(spec), s, t, args.walks, args.seed, workers=args.workers)
    exact = cf.hitting_time(spec, s, t)
    z = (est.mean - float(exact)) / est.std_error if est.std_error else 0.0
    fields = {
        "n": spec.n, "source": str(s), "target": str(t), "walks": est.walks, "seed": est.seed,
        "mean": est.mean, "std_error": est.std_error, "exact": exact_str(exact), "z": z,
    }
    if args.format == "json":
        print(json.dumps(fields, separators=(",", ":")))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\n")
        w.writeheader()
        w.writerow(fields)
        print(buf.getvalue().rstrip("\n"))
    else:
        print(f"h({s}->{t}) ~ {est.mean:.6f} +/- {est.std_error:.6f} "
              f"({est.walks} walks, seed {est.seed}); exact {exact_str(exact)} "
              f"(approx {approx_str(exact)}), z = {z:+.2f}")
    return 0


def cmd_verify(args) -> int:
    try:
        report = run_verification(args.n_min, args.n_max, args.seed,
                                  montecarlo=not args.skip_montecarlo, walks=args.walks)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    results = report.sorted()
    if args.format == "json":
        doc = {
            "passed": report.ok,
            "checks": [
                {"check": r.check, "n": r.n, "passed": r.passed, "total": r.total,
                 "ok": r.ok, "failures": r.failures}
                for r in results
            ],
        }
        print(json.dumps(doc, separators=(",", ":")))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "check", "passed", "total", "status"])
        for r in results:
            w.writerow(["" if r.n is None else r.n, r.check, r.passed, r.total,
                        "PASS" if r.ok else "FAIL"])
        print(buf.getvalue().rstrip("\n"))
    else:
        for r in results:
            where = "all" if r.n is None else f"n={r.n}"
            print(f"{'PASS' if r.ok else 'FAIL'}  {where:<6} {r.check:<14} {r.passed}/{r.total}")
            for detail in r.failures[:5]:
                print(f"      {detail}")
        print("verification " + ("passed" if report.ok else "FAILED"))
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "csv", "json"], default=argparse.SUPPRESS,
                        help="output format (default text)")

    parser = _Parser(prog="wheel", description="Exact random-walk quantities on wheel graphs.",
                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, func, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help, parents=[common])
        p.set_defaults(func=func)
        return p

    def with_n(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--n", type=int, required=True, help="cycle size N >= 3")
        return p

    p = with_n(add("hitting", cmd_hitting, "expected hitting time h(source -> target)"))
    p.add_argument("--source", required=True, help="p<k> or center")
    p.add_argument("--target", required=True, help="p<k> or center")

    p = with_n(add("resistance", cmd_resistance, "effective resistance between two vertices"))
    p.add_argument("--pair", required=True, help="two vertices, e.g. p0,p2 or center,p0")

    p = with_n(add("trees", cmd_trees, "spanning-tree count, optionally after identifying two vertices"))
    p.add_argument("--identify", help="two vertices to merge, e.g. center,p0")

    p = with_n(add("matrix", cmd_matrix, "folded coefficient matrix H (or its inverse)"))
    p.add_argument("--inverse", action="store_true", help="print the closed-form inverse K")

    with_n(add("table", cmd_table, "all wheel quantities for one N"))

    p = with_n(add("simulate", cmd_simulate, "Monte Carlo estimate of a hitting time"))
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--walks", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)

    p = add("verify", cmd_verify, "cross-check closed forms against independent oracles")
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--walks", type=int, default=5000, help="walks per Monte Carlo case")
    p.add_argument("--skip-montecarlo", action="store_true")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # the shared --format action is suppressed so a subcommand never clobbers a global value
    if not hasattr(args, "format"):
        args.format = "text"
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"wheel: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
