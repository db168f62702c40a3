"""Prefect flows for catalog verification."""

from src.flows.verify_catalog import verify_fixture_catalog

__all__ = [
    "verify_fixture_catalog",
]
