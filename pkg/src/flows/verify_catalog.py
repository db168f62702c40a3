"""Verify every catalog fixture: documented invariants plus selected checks.

Each fixture is validated over its documented fields and then checked with the
configured kinds over each of those fields. Work for different fixtures runs
concurrently; the summary is ordered by fixture name and field.

Usage:
    # As a Python function
    from src.flows.verify_catalog import verify_fixture_catalog
    result = verify_fixture_catalog(kinds="manifold,ds")

    # As a CLI command
    face-numbers-verify-catalog --kinds manifold,ds,bounds
"""

from typing import Any

from prefect import flow, get_run_logger
from prefect.task_runners import ConcurrentTaskRunner

from src.exceptions import BadParams
from src.operations.check_ops import CHECK_KINDS
from src.operations.generator_ops import catalog_entries
from src.tasks.check_tasks import load_fixture_task, run_checks_task, validate_fixture_task
from src.utils.config import settings


def parse_kinds(kinds: str) -> list[str]:
    """Split a comma-separated kind list, keeping order and dropping blanks.

    Raises:
        BadParams: If a kind is unknown
    """
    parsed = [k.strip() for k in kinds.split(",") if k.strip()]
    unknown = [k for k in parsed if k not in CHECK_KINDS]
    if unknown or not parsed:
        raise BadParams(f"unknown or empty check kinds: {kinds!r}")
    return parsed


@flow(name="verify-fixture-catalog", task_runner=ConcurrentTaskRunner())
def verify_fixture_catalog(
    kinds: str | None = None,
    seed: int | None = None,
    names: list[str] | None = None,
) -> dict[str, Any]:
    """Validate and check catalog fixtures.

    Args:
        kinds: Comma-separated check kinds (defaults to settings.catalog_check_kinds)
        seed: Seed for face-ring checks (defaults to settings.default_seed)
        names: Restrict to these fixtures (defaults to the whole catalog)

    Returns:
        {
            "passed": True,
            "kinds": ["manifold", "ds", "bounds"],
            "seed": 0,
            "fixtures": {
                "rp2_6": {"validation": {...}, "checks": {"2": [...], "3": [...]}, "passed": True},
                ...
            }
        }
    """
    logger = get_run_logger()

    # Step 1: Resolve parameters
    kind_list = parse_kinds(kinds if kinds is not None else settings.catalog_check_kinds)
    seed = seed if seed is not None else settings.default_seed
    entries = catalog_entries()
    if names is not None:
        wanted = {n.lower() for n in names}
        entries = [e for e in entries if e.name in wanted]
    logger.info(f"Verifying {len(entries)} fixture(s) with kinds {','.join(kind_list)} (seed={seed})")

    # Step 2: Submit validation and checks, one wave of fixtures at a time
    results: dict[str, dict[str, Any]] = {}
    wave_size = settings.catalog_max_workers
    for start in range(0, len(entries), wave_size):
        wave = entries[start:start + wave_size]
        validations = {e.name: validate_fixture_task.submit(e.name) for e in wave}
        complexes = {e.name: load_fixture_task.submit(e.name) for e in wave}
        checks = {
            (e.name, field): run_checks_task.submit(e.name, complexes[e.name], kind_list, field, seed)
            for e in wave
            for field in e.fields
        }

        # Step 3: Collect in deterministic order
        for entry in wave:
            per_field = {field: checks[(entry.name, field)].result() for field in entry.fields}
            validation = validations[entry.name].result()
            passed = validation["pass"] and all(
                report["pass"] for reports in per_field.values() for report in reports
            )
            results[entry.name] = {"validation": validation, "checks": per_field, "passed": passed}
            status = "ok" if passed else "FAILED"
            logger.info(f"{entry.name}: {status}")

    all_passed = all(r["passed"] for r in results.values())
    logger.info("=" * 60)
    logger.info("CATALOG VERIFICATION " + ("PASSED" if all_passed else "FAILED"))
    logger.info("=" * 60)
    for name in sorted(results):
        logger.info(f"{name}: {'ok' if results[name]['passed'] else 'FAILED'}")

    return {
        "passed": all_passed,
        "kinds": kind_list,
        "seed": seed,
        "fixtures": {name: results[name] for name in sorted(results)},
    }


if __name__ == "__main__":
    summary = verify_fixture_catalog()
    print("PASSED" if summary["passed"] else "FAILED")
