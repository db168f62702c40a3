"""Prefect tasks for catalog verification."""

from src.tasks.check_tasks import load_fixture_task, run_checks_task, validate_fixture_task

__all__ = [
    "load_fixture_task",
    "run_checks_task",
    "validate_fixture_task",
]
