"""Command-line front end.

Exit status: 0 success (or ``accepted``), 1 a negative result (a rejected
pattern, a failed verification suite), 2 usage or runtime errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import checks, lie_degrees, rasala, sporadic
from .alt_degrees import alt_degree_pattern, probe_remark_conjecture
from .errors import MAX_N_ENV, PatternFormatError, default_max_n
from .pattern import DegreePattern, read_pattern, write_pattern
from .recognizer import recognize
from .sym_degrees import degree_pattern

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symdeg",
        description="Character degree patterns of symmetric and alternating groups.",
        epilog=f"The default enumeration cap is read from ${MAX_N_ENV} (decimal; default 50).",
    )
    parser.add_argument("--cap", type=int, help="enumeration cap; values above the default need --i-know")
    parser.add_argument("--i-know", action="store_true", help="allow enumeration above the default cap")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pattern", help="emit the degree pattern file of S_n or A_n")
    p.add_argument("n", type=int)
    p.add_argument("--group", choices=("sym", "alt"), default="sym")
    p.add_argument("-o", "--output", help="write to this file (atomically) instead of stdout")

    p = sub.add_parser("recognize", help="decide whether a pattern file is X_1(S_n)")
    p.add_argument("file", help="pattern file, or - for stdin")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("--diagnostics", action="store_true", help="append subset and class-count diagnostics")

    p = sub.add_parser("rasala", help="table of d_1..d_11 of S_n with provenance")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("text", "machine"), default="text")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help=f"one of: {', '.join(sorted(checks.SUITES) + sorted(checks.ALIASES))}")
    p.add_argument("--max-n", type=int, help="upper bound for the suite (m for bertrand)")

    p = sub.add_parser("lie", help="unipotent and Steinberg degrees of a Lie-type group")
    p.add_argument("family", nargs="?", help=f"one of {', '.join(lie_degrees.FAMILIES)}")
    p.add_argument("params", nargs="*", type=int,
                   help="classical: RANK Q; exceptional and L2: Q; Suzuki-Ree: M (field p^(2M+1))")
    p.add_argument("--grid", action="store_true", help="sweep the standard parameter grid")
    p.add_argument("--format", choices=("text", "machine"), default="text")

    p = sub.add_parser("sporadic", help="sporadic degree table: dump, validate, replay")
    p.add_argument("action", choices=("dump", "validate", "replay"))
    p.add_argument("name", nargs="?")
    p.add_argument("--n-min", type=int, default=sporadic.REPLAY_MIN_N)
    p.add_argument("--n-max", type=int)
    p.add_argument("--verbose", action="store_true", help="print the eliminating inequality for every n")

    p = sub.add_parser("probe-remark", help="membership data for the self-conjugate witness degree")
    p.add_argument("n", type=int)
    return parser


def _cap(args: argparse.Namespace, needed: int | None = None) -> int:
    default = default_max_n()
    cap = default if args.cap is None else args.cap
    if cap > default and not args.i_know:
        raise UsageError(f"--cap {cap} exceeds the default {default}; add --i-know to confirm")
    if needed is not None and needed > cap:
        if not args.i_know:
            raise UsageError(f"n={needed} exceeds the enumeration cap {cap}; add --i-know to proceed")
        cap = needed
    return cap


def _cmd_pattern(args, out) -> int:
    cap = _cap(args, args.n)
    if args.group == "sym":
        pattern = degree_pattern(args.n, cap)
        header = [f"X_1(S_{args.n})"]
    else:
        pattern = alt_degree_pattern(args.n, cap)
        header = [f"X_1(A_{args.n})"]
    header.append(f"order {pattern.group_order}, {pattern.class_count} characters")
    if args.output:
        write_pattern(pattern, args.output, header)
    else:
        out.write(pattern.to_text(header))
    return EXIT_OK


def _cmd_recognize(args, out) -> int:
    if args.file == "-":
        pattern = DegreePattern.from_text(sys.stdin.read())
    else:
        pattern = read_pattern(args.file)
    report = recognize(pattern, _cap(args), diagnostics=args.diagnostics)
    out.write((report.to_machine() if args.format == "machine" else report.to_text()) + "\n")
    return EXIT_OK if report.accepted else EXIT_NEGATIVE


def _cmd_rasala(args, out) -> int:
    if args.n < 5:
        raise UsageError("rasala needs n >= 5")
    if args.n < 22:
        _cap(args, args.n)
    for i, value, source in rasala.rasala_table(args.n):
        shown = "-" if value is None else value
        if args.format == "machine":
            out.write(f"i={i}\tn={args.n}\tvalue={shown}\tsource={source}\n")
        else:
            labels = " / ".join(rasala.FORMS[i].labels)
            out.write(f"d_{i:<2} = {shown!s:>20}  [{source}]  {labels}\n")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    result = checks.run_suite(args.suite, args.max_n)
    for failure in result.failures[:20]:
        out.write(f"  {failure}\n")
    out.write(result.summary() + "\n")
    return EXIT_OK if result.passed else EXIT_NEGATIVE


def _lie_spec(family: str, params: list[int]) -> lie_degrees.LieFamilySpec:
    if family in lie_degrees.CLASSICAL:
        if len(params) != 2:
            raise UsageError(f"family {family} takes RANK Q")
        return lie_degrees.LieFamilySpec(family, params[1], rank=params[0])
    if family in lie_degrees.SUZUKI_REE:
        if len(params) != 1:
            raise UsageError(f"family {family} takes M (field size p^(2M+1))")
        return lie_degrees.LieFamilySpec.suzuki_ree(family, params[0])
    if len(params) != 1:
        raise UsageError(f"family {family} takes Q")
    return lie_degrees.LieFamilySpec(family, params[0])


def _lie_line(spec: lie_degrees.LieFamilySpec, fmt: str) -> str:
    st = lie_degrees.steinberg_degree(spec)
    if spec.family == "L2":
        chi = sandwich = None
    else:
        chi = lie_degrees.subunipotent_degree(spec)
        sandwich = 1 < chi < st
    if fmt == "machine":
        return (f"family={spec.family}\trank={'-' if spec.rank is None else spec.rank}\tq={spec.q}"
                f"\tchi1={'-' if chi is None else chi}\tsteinberg={st}"
                f"\tsandwich={'-' if sandwich is None else str(sandwich).lower()}")
    if chi is None:
        guaranteed = sorted(lie_degrees.l2q_guaranteed_degrees(spec.q)) if spec.q >= 7 else []
        return f"{spec.label()}: Steinberg degree {st}; forced degrees (generic range) {guaranteed}"
    verdict = "holds" if sandwich else "FAILS"
    return (f"{spec.label()} [{lie_degrees.LABELS[spec.family]}]: chi_1(1) = {chi}, "
            f"St(1) = {st}; 1 < chi_1(1) < St(1) {verdict}")


def _cmd_lie(args, out) -> int:
    if args.grid:
        ok = True
        for spec in lie_degrees.parameter_grid():
            line = _lie_line(spec, args.format)
            ok = ok and "sandwich=false" not in line and "FAILS" not in line
            out.write(line + "\n")
        return EXIT_OK if ok else EXIT_NEGATIVE
    if not args.family:
        raise UsageError("give a family and parameters, or --grid")
    spec = _lie_spec(args.family, args.params)
    out.write(_lie_line(spec, args.format) + "\n")
    return EXIT_OK


def _cmd_sporadic(args, out) -> int:
    if args.action == "dump":
        out.write("name\tp\td1\td2\td3\n")
        for rec in sporadic.TABLE.values():
            out.write(f"{rec.name}\t{rec.largest_prime}\t{rec.d1}\t{rec.d2}\t{rec.d3}\n")
        return EXIT_OK
    if args.action == "validate":
        problems = sporadic.validate_table()
        for problem in problems:
            out.write(problem + "\n")
        out.write(f"{len(sporadic.TABLE)} rows, {len(problems)} problems\n")
        return EXIT_OK if not problems else EXIT_NEGATIVE
    if not args.name:
        raise UsageError("sporadic replay needs a group name")
    n_max = args.n_max if args.n_max is not None else max(args.n_min, 1000)
    report = sporadic.replay_elimination(args.name, args.n_min, n_max)
    for label, rows in (("almost simple", report.almost_simple), ("S x S index 2", report.wreath)):
        if rows is None:
            continue
        counts: dict[str, int] = {}
        for row in rows:
            counts[row.predicate or "SURVIVES"] = counts.get(row.predicate or "SURVIVES", 0) + 1
            if args.verbose or not row.eliminated:
                out.write(f"{label}\tn={row.n}\t{row.predicate or 'SURVIVES'}\t{row.witness}\n")
        summary = ", ".join(f"{k}: {v}" for k, v in sorted(counts.items()))
        out.write(f"{report.name} {label} n={report.n_min}..{report.n_max}: {summary}\n")
    out.write(f"{report.name}: {'eliminated' if report.eliminated else 'NOT eliminated'}\n")
    return EXIT_OK if report.eliminated else EXIT_NEGATIVE


def _cmd_probe(args, out) -> int:
    probe = probe_remark_conjecture(args.n, _cap(args, args.n))
    out.write(
        f"n={probe.n} partition={tuple(probe.partition)} degree={probe.degree}\n"
        f"{probe.degree // 2} in cd(A_n) - cd(S_n): {probe.half_in_alt_only}\n"
        f"{probe.degree} in cd(S_n) - cd(A_n): {probe.full_in_sym_only}\n"
    )
    return EXIT_OK


COMMANDS = {
    "pattern": _cmd_pattern,
    "recognize": _cmd_recognize,
    "rasala": _cmd_rasala,
    "verify": _cmd_verify,
    "lie": _cmd_lie,
    "sporadic": _cmd_sporadic,
    "probe-remark": _cmd_probe,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, PatternFormatError, ValueError, LookupError, ArithmeticError, OSError) as exc:
        err.write(f"symdeg {args.command}: {exc}\n")
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
