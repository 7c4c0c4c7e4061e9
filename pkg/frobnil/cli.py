"""
Command-line front-end.

    frobnil normalize --algebra clifford_odd --n 2 "u1*x2"
    frobnil act --algebra dual_numbers --n 2 "y[1]*y[2]*u1" --on "x2^3"
    frobnil verify --algebra cyclic_group(3) --n 3 --seed 7
    frobnil iso-check --n 3

Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage,
parse or algebra errors.
"""

import argparse
import logging
import sys
from typing import List, Optional

from frobnil.algebra.frobenius import FrobeniusSuperalgebra
from frobnil.config import settings
from frobnil.exceptions import FrobnilError, ParseError
from frobnil.models import DegreeResponse, ElementResponse, ObjectResponse, VerificationReport
from frobnil.repositories.files import FileAlgebraRepository
from frobnil.services import operations
from frobnil.services.verification import run_isomorphism_check, run_trace_change, run_verification
from frobnil.textio.algebra_file import load_config, parse_element
from frobnil.textio.evaluator import Target
from frobnil.textio.printer import print_element

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _add_algebra_args(parser: argparse.ArgumentParser, with_n: bool = True) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--algebra", default="ground", help="built-in or configured algebra name")
    source.add_argument("--config", help="path to an algebra config file")
    if with_n:
        parser.add_argument("--n", type=int, default=2, help="number of strands")
    parser.add_argument("--json", action="store_true", help="machine-readable output")


def _add_suite_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--degree-cap", type=int, default=None, help=f"default {settings.DEGREE_CAP}")
    parser.add_argument("--seed", type=int, default=None, help=f"default {settings.SEED}")
    parser.add_argument("--samples", type=int, default=None, help=f"default {settings.SAMPLES}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobnil",
        description="Normal forms and relation checks for Frobenius nilHecke algebras.",
    )
    parser.add_argument("--log-level", default=settings.LOG_LEVEL, help="logging level")
    commands = parser.add_subparsers(dest="command", required=True)

    normalize = commands.add_parser("normalize", help="normal form of an expression")
    _add_algebra_args(normalize)
    normalize.add_argument("--target", choices=[t.value for t in Target], default=Target.NILHECKE.value)
    normalize.add_argument("expr")

    act = commands.add_parser("act", help="act on a polynomial")
    _add_algebra_args(act)
    act.add_argument("expr")
    act.add_argument("--on", required=True, help="polynomial to act on")

    grade = commands.add_parser("grade", help="Z-degree and parity of each term")
    _add_algebra_args(grade)
    grade.add_argument("expr")

    verify = commands.add_parser("verify", help="run every applicable suite")
    _add_algebra_args(verify)
    _add_suite_args(verify)

    for name, help_text in (
        ("dual-basis", "print the dual basis"),
        ("tau", "print tau, or both teleporters"),
        ("nakayama", "print the Nakayama automorphism"),
    ):
        _add_algebra_args(commands.add_parser(name, help=help_text), with_n=False)

    iso = commands.add_parser("iso-check", help="check the Clifford nilHecke isomorphism")
    iso.add_argument("--n", type=int, default=2)
    iso.add_argument("--json", action="store_true")
    _add_suite_args(iso)

    trace_change = commands.add_parser("trace-change", help="check a change of trace by an invertible element")
    _add_algebra_args(trace_change)
    trace_change.add_argument("--u", required=True, help="invertible element, e.g. 'g' or '1 + 1/2*y'")
    return parser


def _algebra(args: argparse.Namespace) -> FrobeniusSuperalgebra:
    if args.config:
        return load_config(args.config)
    return FileAlgebraRepository().get_by_name(args.algebra)


def _print_report(report: VerificationReport, as_json: bool) -> int:
    if as_json:
        print(report.model_dump_json(indent=2))
    else:
        print(f"{report.algebra}, n={report.n}, seed={report.seed}, degree cap={report.degree_cap}")
        for suite in report.suites:
            status = "info" if suite.informational else ("PASS" if suite.passed else "FAIL")
            detail = f"  [{suite.detail}]" if suite.detail else ""
            print(f"  {status:4} {suite.name} ({suite.instances}){detail}")
            if not suite.passed:
                for failure in suite.failures:
                    print(f"         {failure}")
        failed = report.failed_suites()
        print("all suites pass" if not failed else f"{len(failed)} suite(s) fail")
    return EXIT_OK if report.passed else EXIT_FAILED


def _print_object(response: ObjectResponse, as_json: bool) -> None:
    if as_json:
        print(response.model_dump_json(indent=2))
    else:
        print("\n".join(response.values))


def run(args: argparse.Namespace) -> int:
    """Execute one parsed invocation and return its exit code."""
    command = args.command
    if command == "iso-check":
        return _print_report(run_isomorphism_check(args.n, args.seed, args.degree_cap, args.samples), args.json)

    A = _algebra(args)
    if command == "verify":
        return _print_report(run_verification(A, args.n, args.seed, args.degree_cap, args.samples), args.json)
    if command == "trace-change":
        return _print_report(run_trace_change(A, parse_element(args.u, A), args.n), args.json)

    if command in ("normalize", "act"):
        if command == "normalize":
            result, _ = operations.normalize_expression(A, args.n, args.expr, Target(args.target))
            target = args.target
        else:
            result = operations.act_expression(A, args.n, args.expr, args.on)
            target = Target.POLYNOMIAL.value
        text = print_element(result, A)
        if args.json:
            response = ElementResponse(algebra=A.name, n=args.n, target=target, result=text, terms=len(result))
            print(response.model_dump_json(indent=2))
        else:
            print(text)
        return EXIT_OK

    if command == "grade":
        terms = operations.graded_terms(A, args.n, args.expr)
        if args.json:
            print(DegreeResponse(algebra=A.name, n=args.n, terms=terms).model_dump_json(indent=2))
        else:
            for term in terms:
                degree = "-" if term.z_degree is None else term.z_degree
                print(f"{term.term}\tdegree {degree}\tparity {term.parity}")
        return EXIT_OK

    lines = {
        "dual-basis": operations.dual_basis_lines,
        "tau": operations.tau_lines,
        "nakayama": operations.nakayama_lines,
    }[command](A)
    _print_object(ObjectResponse(algebra=A.name, object=command, values=lines), args.json)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=args.log_level.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return run(args)
    except ParseError as e:
        print(f"frobnil: parse error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except FrobnilError as e:
        print(f"frobnil: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
