"""Command-line interface.

Exit status: 0 on success, 1 when a verification fails or formulas disagree,
2 on precondition violations (bad sequence, wrong Brill-Noether number, ...).
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import codim2, divisor, oracle, suites
from .bn import BNInput, eh_exists, enumerate_sequences, rho, rho_adjusted
from .castelnuovo import adjusted_castelnuovo, castelnuovo_number
from .errors import PreconditionError
from .pointed import pointed_count
from .report import canonical_json, decimal


class SuiteFailure(Exception):
    pass


def parse_sequence(text: str) -> tuple[int, ...]:
    try:
        a = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    for i in range(1, len(a)):
        if a[i] <= a[i - 1]:
            raise argparse.ArgumentTypeError(
                f"sequence not strictly increasing: a_{i - 1}={a[i - 1]}, a_{i}={a[i]}"
            )
    return a


def parse_range(text: str) -> range:
    lo, sep, hi = text.partition(":")
    try:
        if not sep:
            return range(int(lo), int(lo) + 1)
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")


# -- output -------------------------------------------------------------------

def _cell(value) -> str:
    if isinstance(value, (list, tuple)):
        return ",".join(_cell(v) for v in value)
    return decimal(value)


def emit(result: dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(canonical_json(_jsonable(result)))
    elif fmt == "tsv":
        out.write("\t".join(result) + "\n")
        out.write("\t".join(_cell(v) for v in result.values()) + "\n")
    elif len(result) == 1:
        out.write(_cell(next(iter(result.values()))) + "\n")
    else:
        for k, v in result.items():
            out.write(f"{k}: {_cell(v)}\n")


def emit_rows(rows: list[dict], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(canonical_json([_jsonable(r) for r in rows]))
        return
    if not rows:
        return
    out.write("\t".join(rows[0]) + "\n")
    for row in rows:
        out.write("\t".join(_cell(v) for v in row.values()) + "\n")


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, bool) or x is None:
        return x
    return str(x)


# -- commands -----------------------------------------------------------------

def _problem(args) -> BNInput:
    return BNInput(args.g, args.r, args.d)


def cmd_rho(args) -> dict:
    p = _problem(args)
    if args.a is None:
        return {"rho": rho(p)}
    return {"rho_adjusted": rho_adjusted(p, args.a)}


def cmd_exists(args) -> dict:
    return {"exists": eh_exists(_problem(args), args.a)}


def cmd_castelnuovo(args) -> dict:
    p = _problem(args)
    if args.a is None:
        return {"N": castelnuovo_number(p)}
    return {"N": adjusted_castelnuovo(p, args.a)}


def cmd_pointed(args) -> dict:
    p = _problem(args)
    methods = {
        "compact": pointed_count,
        "det": oracle.pointed_via_det,
        "sym": oracle.pointed_via_sym,
    }
    if args.method != "all":
        return {"n": methods[args.method](p, args.a)}
    values = {name: f(p, args.a) for name, f in methods.items()}
    emit(values, args.format)
    if len(set(values.values())) != 1:
        raise SuiteFailure("formulas disagree: " + ", ".join(f"{k}={v}" for k, v in values.items()))
    return {}


def cmd_divisor_class(args) -> dict:
    p = _problem(args)
    mu, nu = divisor.mu_nu(p, args.a)
    cls = mu * divisor.bn_class(p.g) + nu * divisor.w_class(p.g)
    out = {"mu": mu, "nu": nu}
    out.update(cls.items())
    if args.format == "plain":
        out["class"] = str(cls)
    return out


def cmd_codim2(args) -> dict:
    res = codim2.surface_intersection(args.i, _problem(args))
    if not args.terms:
        return {"T": res.value}
    if args.format == "json":
        return {
            "T": res.value,
            "terms": [
                {"a": list(t.a), "left": t.left, "right": t.right} for t in res.terms
            ],
        }
    emit_rows(
        [{"a": tuple(t.a), "left": t.left, "right": t.right, "product": t.product} for t in res.terms],
        "tsv",
    )
    if args.format == "plain":
        sys.stdout.write(f"T: {res.value}\n")
    return {}


def cmd_verify(args) -> dict:
    params = {"gmax": args.gmax, "rmax": args.rmax, "seed": args.seed}
    report = suites.run_suite(args.suite, jobs=args.jobs, **params)
    if args.format == "json":
        sys.stdout.write(canonical_json(report.to_dict(include_timing=args.timing)))
    else:
        status = "PASS" if report.passed else "FAIL"
        sys.stdout.write(f"{status}\t{report.suite}\t{report.cases} cases\t{len(report.failures)} failures\n")
        for f in report.failures:
            sys.stdout.write(f"{f['case']}\texpected {f['expected']}\tactual {f['actual']}\n")
        if args.timing:
            sys.stdout.write(f"elapsed\t{report.elapsed:.3f}s\n")
    if not report.passed:
        raise SuiteFailure(f"suite {report.suite} failed {len(report.failures)} of {report.cases} cases")
    return {}


def cmd_table(args) -> dict:
    rows = []
    grange = args.range
    if args.kind == "catalan":
        for m in grange:
            if m < 1:
                continue
            rows.append({"m": m, "g": 2 * m, "d": m + 1, "N": castelnuovo_number(BNInput(2 * m, 1, m + 1))})
    elif args.kind == "castelnuovo":
        for g in grange:
            for r in range(1, (args.rmax or g) + 1):
                if g % (r + 1):
                    continue
                d = g + r - g // (r + 1)
                rows.append({"g": g, "r": r, "d": d, "N": castelnuovo_number(BNInput(g, r, d))})
    else:
        for g in grange:
            if g < 2:
                continue
            for r in range(1, (args.rmax or 3) + 1):
                for d in range(0, g + r + 1):
                    p = BNInput(g, r, d)
                    for a in enumerate_sequences(p, -1):
                        rows.append({"g": g, "r": r, "d": d, "a": tuple(a), "n": pointed_count(p, a)})
    emit_rows(rows, "json" if args.format == "json" else "tsv")
    return {}


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["plain", "tsv", "json"], default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes for sweeps")

    parser = argparse.ArgumentParser(
        prog="bncount", description="Exact Brill-Noether counts on general curves."
    )
    parser.add_argument("--format", choices=["plain", "tsv", "json"], default="plain")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    sub = parser.add_subparsers(dest="command", required=True)

    def problem(name, help, seq=None):
        sp = sub.add_parser(name, help=help, parents=[common])
        sp.add_argument("-g", type=int, required=True, help="genus")
        sp.add_argument("-r", type=int, required=True, help="projective dimension")
        sp.add_argument("-d", type=int, required=True, help="degree")
        if seq is not None:
            sp.add_argument("-a", type=parse_sequence, required=seq, metavar="A0,A1,...",
                            help="vanishing sequence")
        return sp

    problem("rho", "Brill-Noether number, adjusted if -a is given", seq=False).set_defaults(func=cmd_rho)
    problem("exists", "existence test at a general point", seq=True).set_defaults(func=cmd_exists)
    problem("castelnuovo", "Castelnuovo number, adjusted if -a is given", seq=False).set_defaults(
        func=cmd_castelnuovo
    )
    sp = problem("pointed", "pointed Castelnuovo number", seq=True)
    sp.add_argument("--method", choices=["compact", "det", "sym", "all"], default="compact")
    sp.set_defaults(func=cmd_pointed)
    problem("divisor-class", "class of the pointed Brill-Noether divisor", seq=True).set_defaults(
        func=cmd_divisor_class
    )
    sp = problem("codim2", "intersection with the test surface S_i")
    sp.add_argument("-i", type=int, required=True, help="genus of the first component")
    sp.add_argument("--terms", action="store_true", help="show the per-sequence breakdown")
    sp.set_defaults(func=cmd_codim2)

    sp = sub.add_parser("verify", help="run a named verification suite", parents=[common])
    sp.add_argument("--suite", required=True, choices=sorted(suites.SUITES))
    sp.add_argument("--gmax", type=int)
    sp.add_argument("--rmax", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--timing", action="store_true", help="include elapsed time in the report")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("table", help="emit a TSV table", parents=[common])
    sp.add_argument("--kind", required=True, choices=["catalan", "castelnuovo", "pointed"])
    sp.add_argument("--range", type=parse_range, required=True, metavar="LO:HI",
                    help="genus range (m for catalan), inclusive")
    sp.add_argument("--rmax", type=int)
    sp.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
        if result:
            emit(result, args.format)
    except PreconditionError as exc:
        print(f"bncount: precondition violated: {exc}", file=sys.stderr)
        return 2
    except SuiteFailure as exc:
        print(f"bncount: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
