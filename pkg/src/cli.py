"""Command-line interface for face-numbers.

Subcommands load or generate complexes, print face-number vectors, and run checks.
Exit codes: 0 when every requested check passes, 1 when a check fails or a
computation raises, 2 for usage errors (bad flags, unreadable input).
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from src.exceptions import FaceNumbersError, UsageError
from src.models.schemas import CheckReport, RunConfig, RunReport, SimplicialComplex
from src.operations.check_ops import CHECK_KINDS, face_vector_set, run_checks
from src.operations.complex_ops import (
    connected_components,
    f_vector,
    format_fct,
    is_pure,
    read_fct,
    write_fct,
)
from src.operations.field_ops import parse_field_spec
from src.operations.generator_ops import GENERATOR_FAMILIES, generate, load_fixture
from src.utils.config import settings


def load_input(source: str) -> SimplicialComplex:
    """Read a .fct file, or a bundled fixture when no such file exists.

    Raises:
        FacetParseError: If the file cannot be parsed
        UnknownFixture: If the name is neither a file nor a fixture
    """
    if Path(source).is_file():
        return read_fct(source)
    return load_fixture(source)


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--field",
        default=settings.default_field,
        help="Coefficient field, p or p^m with p prime"
    )
    common.add_argument(
        "--seed",
        type=int,
        default=settings.default_seed,
        help="Seed for random linear forms"
    )
    common.add_argument(
        "--format",
        dest="output_format",
        choices=["json", "text"],
        default=settings.report_format,
        help="Report format"
    )
    common.add_argument(
        "-o",
        "--output",
        default=None,
        help="Write the report (or, for gen, the .fct file) here instead of stdout"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="face-numbers",
        description="Face numbers, Betti numbers and face-ring checks for simplicial complexes",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter
    )
    sub = parser.add_subparsers(dest="command", required=True)

    info = sub.add_parser(
        "info", parents=[common], help="Basic facts about a complex",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter
    )
    info.add_argument("input", help=".fct file or fixture name")

    vectors = sub.add_parser(
        "vectors", parents=[common], help="f, h, g, h′, h″ and Betti numbers",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter
    )
    vectors.add_argument("input", help=".fct file or fixture name")

    check = sub.add_parser(
        "check", parents=[common], help="Run identity and inequality checks",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter
    )
    check.add_argument("kind", choices=[*CHECK_KINDS, "all"], help="Check kind")
    check.add_argument("input", help=".fct file or fixture name")

    gen = sub.add_parser(
        "gen", parents=[common], help="Generate a complex from a named family",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter
    )
    gen.add_argument("family", choices=list(GENERATOR_FAMILIES), help="Family name")
    gen.add_argument("--d", type=int, default=None, help="Facet size")
    gen.add_argument("--n", type=int, default=None, help="Number of vertices")

    catalog = sub.add_parser(
        "catalog", parents=[common], help="Validate and check every bundled fixture",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter
    )
    catalog.add_argument(
        "--kinds",
        default=settings.catalog_check_kinds,
        help="Comma-separated check kinds"
    )
    return parser


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_info(config: RunConfig) -> RunReport:
    complex_ = load_input(config.inputs[0])
    return RunReport(
        command="info",
        input=config.inputs[0],
        passed=True,
        data={
            "n": complex_.n,
            "d": complex_.d,
            "dim": complex_.dim,
            "facets": len(complex_.facets),
            "f": f_vector(complex_),
            "pure": is_pure(complex_),
            "components": len(connected_components(complex_)),
            "labels": list(complex_.labels),
        },
    )


def cmd_vectors(config: RunConfig) -> RunReport:
    complex_ = load_input(config.inputs[0])
    vectors = face_vector_set(complex_, parse_field_spec(config.field))
    return RunReport(
        command="vectors",
        input=config.inputs[0],
        field=config.field,
        passed=True,
        data=vectors.model_dump(),
    )


def cmd_check(config: RunConfig, kind: str) -> RunReport:
    complex_ = load_input(config.inputs[0])
    checks = run_checks(kind, complex_, parse_field_spec(config.field), config.seed)
    return RunReport(
        command="check",
        kind=kind,
        input=config.inputs[0],
        field=config.field,
        seed=config.seed,
        passed=all(c.passed for c in checks),
        checks=checks,
    )


def cmd_gen(family: str, d: int | None, n: int | None, output: str | None) -> tuple[RunReport, str]:
    """Generate a family member; returns the report and the .fct text."""
    complex_ = generate(family, d=d, n=n)
    params = ", ".join(f"{k}={v}" for k, v in (("d", d), ("n", n)) if v is not None)
    header = f"{family}({params})" if params else family
    if output:
        write_fct(complex_, output, header=header)
    report = RunReport(
        command="gen",
        input=family,
        passed=True,
        data={"family": family, "d": d, "n": n, "f": f_vector(complex_), "output": output},
    )
    return report, format_fct(complex_, header=header)


def cmd_catalog(config: RunConfig, kinds: str) -> RunReport:
    from src.flows.verify_catalog import verify_fixture_catalog

    summary = verify_fixture_catalog(kinds=kinds, seed=config.seed)
    checks = [
        CheckReport.model_validate({**result["validation"], "passed": result["validation"]["pass"]})
        for result in summary["fixtures"].values()
    ]
    return RunReport(
        command="catalog",
        kind=kinds,
        seed=config.seed,
        passed=summary["passed"],
        checks=checks,
        data={"fixtures": summary["fixtures"]},
    )


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def render_json(report: RunReport) -> str:
    return json.dumps(report.model_dump(mode="json", by_alias=True), indent=2, sort_keys=True) + "\n"


def _fmt(values: Any) -> str:
    if values is None:
        return "-"
    return "(" + ", ".join(str(v) for v in values) + ")"


def render_text(report: RunReport) -> str:
    lines = ["=" * 60, f"{report.command.upper()} {report.input or ''}".rstrip(), "=" * 60]
    if report.field:
        lines.append(f"Field: GF({report.field})")
    data = report.data
    if report.command == "vectors":
        lines.extend([
            f"f  = {_fmt(data['f'])}",
            f"h  = {_fmt(data['h'])}",
            f"g  = {_fmt(data['g'])}",
            f"h′ = {_fmt(data['h_prime'])}",
            f"h″ = {_fmt(data['h_dprime'])}",
            f"β̃  = {_fmt(data['betti'])}",
        ])
        if data.get("gbar") is not None:
            lines.append(f"ḡ  = {_fmt(data['gbar'])}")
    elif report.command == "catalog":
        for name, result in data["fixtures"].items():
            lines.append(f"{name}: {'PASS' if result['passed'] else 'FAIL'}")
    else:
        for key, value in data.items():
            lines.append(f"{key}: {_fmt(value) if isinstance(value, list) else value}")
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        lines.append(f"{check.name}: {status} residuals={_fmt(check.residuals)}")
        failed = [name for name, ok in check.assertions.items() if not ok]
        if failed:
            lines.append(f"  failed assertions: {', '.join(failed)}")
    if report.checks:
        lines.append("-" * 60)
        lines.append("ALL CHECKS PASSED" if report.passed else "SOME CHECKS FAILED")
    return "\n".join(lines) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    """CLI entry point.

    Usage:
        face-numbers vectors torus_7 --field 5
        face-numbers check ds fixtures/torus7.fct --field 5
        face-numbers gen kuhnel-lassman --d 5 --n 9 -o m59.fct
        face-numbers check schenzel rp2_6 --field 2^16 --seed 7
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        config = RunConfig(
            command=args.command,
            inputs=[args.input] if hasattr(args, "input") else [],
            field=args.field,
            seed=args.seed,
            output_format=args.output_format,
            output=args.output,
        )
    except ValidationError as e:
        print(f"Error: {e.errors()[0]['msg']}", file=sys.stderr)
        return 2

    try:
        if config.command == "gen":
            report, fct_text = cmd_gen(args.family, args.d, args.n, config.output)
            if not config.output:
                sys.stdout.write(fct_text)
                return 0
            config = config.model_copy(update={"output": None})
        elif config.command == "info":
            report = cmd_info(config)
        elif config.command == "vectors":
            report = cmd_vectors(config)
        elif config.command == "check":
            report = cmd_check(config, args.kind)
        else:
            report = cmd_catalog(config, args.kinds)
    except UsageError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2
    except FaceNumbersError as e:
        print(f"Error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1

    text = render_text(report) if config.output_format == "text" else render_json(report)
    _emit(text, config.output)
    return 0 if report.passed else 1


def verify_catalog_cli() -> int:
    """CLI entry point for the catalog verification flow.

    Usage:
        face-numbers-verify-catalog --kinds manifold,ds,bounds --seed 0
    """
    parser = argparse.ArgumentParser(
        description="Validate every bundled fixture and run checks on it",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter
    )
    parser.add_argument(
        "--kinds",
        default=settings.catalog_check_kinds,
        help="Comma-separated check kinds"
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=settings.default_seed,
        help="Seed for face-ring checks"
    )
    parser.add_argument(
        "--json",
        action="store_true",
        help="Output the summary as JSON"
    )
    args = parser.parse_args()

    from src.flows.verify_catalog import verify_fixture_catalog

    try:
        summary = verify_fixture_catalog(kinds=args.kinds, seed=args.seed)
    except UsageError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2
    except FaceNumbersError as e:
        print(f"\nError verifying catalog: {e}", file=sys.stderr)
        return 1

    if args.json:
        print(json.dumps(summary, indent=2, sort_keys=True))
    else:
        print("\n" + "=" * 60)
        print("CATALOG VERIFICATION")
        print("=" * 60)
        for name, result in summary["fixtures"].items():
            failed = [
                f"{report['name']}/GF({field})"
                for field, reports in result["checks"].items()
                for report in reports
                if not report["pass"]
            ]
            status = "✅" if result["passed"] else "❌"
            print(f"{status} {name}" + (f"  failed: {', '.join(failed)}" if failed else ""))
        print()

    return 0 if summary["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
