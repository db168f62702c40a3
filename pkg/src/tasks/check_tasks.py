"""Prefect task wrappers for catalog loading, validation and checks.

These tasks are thin wrappers around operations layer functions. All
computation remains in the operations layer (generator_ops, check_ops).
"""

from typing import Any

from prefect import get_run_logger, task

from src.exceptions import FaceNumbersError
from src.models.schemas import CheckReport, SimplicialComplex
from src.operations.check_ops import run_checks
from src.operations.field_ops import parse_field_spec
from src.operations.generator_ops import load_fixture, validate_fixture


@task(task_run_name="load-{name}")
def load_fixture_task(name: str) -> SimplicialComplex:
    """Load a catalog fixture by name.

    Args:
        name: Fixture name, case-insensitive (e.g. "rp2_6")

    Returns:
        Canonical SimplicialComplex
    """
    return load_fixture(name)


@task(task_run_name="validate-{name}")
def validate_fixture_task(name: str) -> dict[str, Any]:
    """Recompute a fixture's Betti numbers and manifold status over its documented fields.

    Args:
        name: Fixture name

    Returns:
        CheckReport dumped with the "pass" alias
    """
    return validate_fixture(name).model_dump(by_alias=True)


@task(task_run_name="check-{name}-gf{field}")
def run_checks_task(
    name: str, complex_: SimplicialComplex, kinds: list[str], field: str, seed: int
) -> list[dict[str, Any]]:
    """Run several check kinds on one complex over one field.

    A kind whose preconditions fail yields a failing report named after the kind
    with the error message in its context, so one fixture never hides another.

    Args:
        name: Fixture name (for logging)
        complex_: The complex to check
        kinds: Check kinds in run order
        field: Field spec string
        seed: Seed for face-ring checks

    Returns:
        CheckReports dumped with the "pass" alias, in kind order
    """
    logger = get_run_logger()
    spec = parse_field_spec(field)
    reports: list[dict[str, Any]] = []
    for kind in kinds:
        try:
            checks = run_checks(kind, complex_, spec, seed)
        except FaceNumbersError as e:
            logger.warning(f"{name} over GF({field}): {kind} checks not applicable ({e})")
            checks = [
                CheckReport.from_residuals(
                    kind,
                    [],
                    assertions={"applicable": False},
                    context={"error": f"{type(e).__name__}: {e}"},
                )
            ]
        reports.extend(c.model_dump(by_alias=True) for c in checks)
    failed = sum(1 for r in reports if not r["pass"])
    logger.info(f"{name} over GF({field}): {len(reports)} checks, {failed} failed")
    return reports
