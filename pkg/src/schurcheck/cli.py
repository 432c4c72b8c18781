"""Partition conjugation, contract checking and Schur-function tools.

Exit status: 0 on success (and, for ``verify``, when every contract holds),
1 on a contract violation or a mathematical error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Iterator, Optional

from . import __version__
from .engine import ContractReport, conjgte_instrumented, conjgte_run, descents
from .errors import NotAPartition, SchurCheckError
from .partitions import (
    DEFAULT_MAX,
    FixedPartitionSequence,
    Partition,
    conjugate_oracle,
    format_partition,
    from_fixed,
    parse_partition,
    partitions_of,
    to_fixed,
)
from .symmetric import (
    MonomialPolynomial,
    format_expansion,
    format_polynomial,
    parse_polynomial,
    plethysm,
    schur_decompose,
    schur_polynomial,
)
from .tableaux import enumerate_ssyt

STDIN = "-"


class UsageError(Exception):
    pass


def _partition_arg(text: str):
    if text == STDIN:
        return STDIN
    try:
        return parse_partition(text)
    except NotAPartition as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid int value: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid int value: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def _mutation(text: str) -> tuple[int, int]:
    idx, sep, val = text.partition("=")
    try:
        if not sep:
            raise ValueError
        return int(idx), int(val)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected INDEX=VALUE, got {text!r}") from None


def _partitions(arg, stdin) -> Iterator[Partition]:
    """The single partition argument, or one per line of stdin for ``-``."""
    if arg != STDIN:
        yield arg
        return
    for lineno, line in enumerate(stdin, 1):
        line = line.strip()
        if line.startswith("#"):
            continue
        try:
            yield parse_partition(line)
        except NotAPartition as exc:
            raise UsageError(f"argument partition: stdin line {lineno}: {exc}") from None


def _emit(out, args, text: str, payload) -> None:
    if args.json:
        out.write(json.dumps(payload) + "\n")
    elif text:
        out.write(text + "\n")


# -- subcommands ---------------------------------------------------------------


def cmd_conjugate(args, out, stdin) -> int:
    for p in _partitions(args.partition, stdin):
        b = conjgte_run(to_fixed(p, args.max), FixedPartitionSequence.zeros(args.max))
        c = from_fixed(b)
        if args.json:
            out.write(json.dumps(list(c.parts)) + "\n")
        else:
            out.write(format_partition(c) + "\n")
    return 0


def _format_report(p: Partition, b: FixedPartitionSequence, report: ContractReport) -> str:
    status = "PASS" if report.passed else "FAIL"
    lines = [f"{status} conjgte({format_partition(p)}) -> {','.join(str(x) for x in b.nonzero_prefix())}"]
    for v in report.violations:
        binds = " ".join(f"{k}={val}" for k, val in v.bindings.items())
        lines.append(f"  violation {v.id} at {v.point} [{binds}]: {v.message}")
    tr = report.variant_traces
    lines.append("  variants outer: " + " ".join(str(x) for x in tr["outer"]))
    for name in ("inner", "for"):
        lines.append(f"  variants {name}: " + " | ".join(" ".join(str(x) for x in t) for t in tr[name]))
    lines.append("  writes: " + ",".join(str(i) for i in sorted(report.writes)))
    return "\n".join(line.rstrip() for line in lines)


def cmd_verify(args, out, stdin) -> int:
    status = 0
    for p in _partitions(args.partition, stdin):
        a = to_fixed(p, args.max)
        b = FixedPartitionSequence.zeros(args.max)
        for idx, val in args.mutate_b:
            if not 1 <= idx < args.max:
                raise UsageError(f"argument --mutate-b: index {idx} outside [1, {args.max})")
            b[idx] = val
        result, report = conjgte_instrumented(
            a, b, check_precondition=not args.no_check_precondition, literal_countifsup=args.literal_countifsup
        )
        _emit(out, args, _format_report(p, result, report), report.to_dict())
        if not report.passed:
            status = 1
    return status


def cmd_oracle_compare(args, out, stdin) -> int:
    checked = skipped = mismatches = violations = 0
    zeros = FixedPartitionSequence.zeros(args.max)
    for n in range(args.n_max + 1):
        for p in partitions_of(n):
            try:
                a = to_fixed(p, args.max)
            except SchurCheckError:
                skipped += 1
                continue
            if from_fixed(conjgte_run(a, zeros)) != conjugate_oracle(p):
                mismatches += 1
            _, report = conjgte_instrumented(a, zeros)
            if not report.passed:
                violations += 1
            checked += 1
    text = f"checked {checked} partitions with n <= {args.n_max}: {mismatches} mismatches, {violations} contract violations"
    if skipped:
        text += f" ({skipped} skipped: do not fit max={args.max})"
    payload = {
        "n_max": args.n_max,
        "max": args.max,
        "checked": checked,
        "skipped": skipped,
        "mismatches": mismatches,
        "violations": violations,
    }
    _emit(out, args, text, payload)
    return 1 if mismatches or violations else 0


def cmd_ssyt(args, out, stdin) -> int:
    for shape in _partitions(args.shape, stdin):
        tabs = list(enumerate_ssyt(shape, args.max_entry))
        _emit(out, args, "\n\n".join(t.render() for t in tabs), [t.to_json() for t in tabs])
    return 0


def cmd_schur(args, out, stdin) -> int:
    for shape in _partitions(args.shape, stdin):
        p = schur_polynomial(shape, args.nvars)
        _emit(out, args, format_polynomial(p), p.to_json())
    return 0


def cmd_plethysm(args, out, stdin) -> int:
    p = plethysm(args.outer, args.inner, args.nvars)
    if args.decompose:
        s = schur_decompose(p)
        _emit(out, args, format_expansion(s), s.to_json())
    else:
        _emit(out, args, format_polynomial(p), p.to_json())
    return 0


def cmd_decompose(args, out, stdin) -> int:
    if args.file == STDIN:
        text = stdin.read()
    else:
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"argument file: {exc}") from None
    try:
        if text.lstrip().startswith("{"):
            p = MonomialPolynomial.from_json(json.loads(text))
        elif args.nvars is None:
            raise UsageError("argument --nvars: required for text-format polynomials")
        else:
            p = parse_polynomial(text, args.nvars)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"argument file: cannot read polynomial: {exc}") from None
    s = schur_decompose(p)
    _emit(out, args, format_expansion(s), s.to_json())
    return 0


def cmd_descents(args, out, stdin) -> int:
    for p in _partitions(args.partition, stdin):
        d = descents(p)
        _emit(out, args, ",".join(str(i) for i in d), d)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schurcheck", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.set_defaults(func=func)
        return p

    part_help = "partition as comma-separated parts, '' for empty, '-' to read one per line from stdin"

    p = add("conjugate", cmd_conjugate, "conjugate a partition with the fixed-array routine")
    p.add_argument("partition", type=_partition_arg, help=part_help)
    p.add_argument("--max", type=_positive_int, default=DEFAULT_MAX, help="fixed array size (default 100)")

    p = add("verify", cmd_verify, "run the instrumented routine and report every contract")
    p.add_argument("partition", type=_partition_arg, help=part_help)
    p.add_argument("--max", type=_positive_int, default=DEFAULT_MAX, help="fixed array size (default 100)")
    p.add_argument("--mutate-b", type=_mutation, action="append", default=[], metavar="K=V",
                   help="pre-set B[K]=V before the call (repeatable)")
    p.add_argument("--no-check-precondition", action="store_true", help="skip the requires-clauses")
    p.add_argument("--literal-countifsup", action="store_true",
                   help="use the weaker disjunctive counting predicate in assert/invariants/ensures")

    p = add("oracle-compare", cmd_oracle_compare, "compare the routine against the counting formula")
    p.add_argument("--n-max", type=_nonneg_int, required=True, help="check every partition of n <= N-MAX")
    p.add_argument("--max", type=_positive_int, default=DEFAULT_MAX, help="fixed array size (default 100)")

    p = add("ssyt", cmd_ssyt, "list semi-standard Young tableaux of a shape")
    p.add_argument("shape", type=_partition_arg, help=part_help)
    p.add_argument("--max-entry", type=_positive_int, required=True, help="largest allowed entry")

    p = add("schur", cmd_schur, "Schur polynomial in finitely many variables")
    p.add_argument("shape", type=_partition_arg, help=part_help)
    p.add_argument("--nvars", type=_positive_int, required=True, help="number of variables")

    p = add("plethysm", cmd_plethysm, "plethysm s_outer(s_inner) by monomial substitution")
    p.add_argument("outer", type=_partition_arg)
    p.add_argument("inner", type=_partition_arg)
    p.add_argument("--nvars", type=_positive_int, required=True, help="number of variables")
    p.add_argument("--decompose", action="store_true", help="print the Schur-basis expansion")

    p = add("decompose", cmd_decompose, "expand a symmetric polynomial in the Schur basis")
    p.add_argument("file", help="polynomial as JSON or text, '-' for stdin")
    p.add_argument("--nvars", type=_positive_int, help="number of variables (text input only)")

    p = add("descents", cmd_descents, "descent positions of a partition")
    p.add_argument("partition", type=_partition_arg, help=part_help)
    return parser


def main(argv: Optional[list[str]] = None, out=None, stdin=None) -> int:
    out = sys.stdout if out is None else out
    stdin = sys.stdin if stdin is None else stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "plethysm" and STDIN in (args.outer, args.inner):
        sys.stderr.write("schurcheck: error: argument outer/inner: stdin batch mode is not supported for plethysm\n")
        return 2
    func: Callable = args.func
    try:
        return func(args, out, stdin)
    except UsageError as exc:
        sys.stderr.write(f"schurcheck: error: {exc}\n")
        return 2
    except (SchurCheckError, OverflowError) as exc:
        sys.stderr.write(f"schurcheck: {type(exc).__name__}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
