"""Tests for the catalog verification flow and its tasks."""

from unittest.mock import MagicMock, patch

import pytest
from prefect.testing.utilities import prefect_test_harness

from src.exceptions import BadParams
from src.flows.verify_catalog import parse_kinds, verify_fixture_catalog
from src.tasks.check_tasks import run_checks_task, validate_fixture_task


@pytest.fixture(scope="module")
def prefect_harness():
    """Run flows against a temporary local Prefect database."""
    with prefect_test_harness():
        yield


class TestParseKinds:
    """Test the comma-separated kind list."""

    def test_keeps_order_and_drops_blanks(self):
        assert parse_kinds("ds, manifold,,bounds") == ["ds", "manifold", "bounds"]

    def test_rejects_unknown_kind(self):
        with pytest.raises(BadParams):
            parse_kinds("ds,homotopy")

    def test_rejects_empty_list(self):
        with pytest.raises(BadParams):
            parse_kinds(" , ")


class TestTasks:
    """Test the task functions outside a flow run."""

    def test_validate_fixture_task_uses_pass_alias(self):
        report = validate_fixture_task.fn("rp2_6")
        assert report["pass"] is True
        assert report["name"] == "fixture_validation"

    @patch("src.tasks.check_tasks.get_run_logger")
    def test_inapplicable_kind_becomes_failing_report(self, mock_logger, torus):
        mock_logger.return_value = MagicMock()
        reports = run_checks_task.fn("torus_7", torus, ["h2"], "2", 0)
        assert len(reports) == 1
        assert reports[0]["name"] == "h2"
        assert reports[0]["pass"] is False
        assert reports[0]["assertions"] == {"applicable": False}
        assert "EmptyBoundary" in reports[0]["context"]["error"]
        assert mock_logger.return_value.warning.called

    @patch("src.tasks.check_tasks.get_run_logger")
    def test_checks_in_kind_order(self, mock_logger, mobius):
        mock_logger.return_value = MagicMock()
        reports = run_checks_task.fn("mobius_5", mobius, ["ds", "manifold"], "3", 0)
        assert [r["name"] for r in reports] == ["ds_boundary", "manifold", "les_identity"]
        assert all(r["pass"] for r in reports)


@pytest.mark.integration
class TestVerifyCatalogFlow:
    """Test the flow end to end on part of the catalog."""

    def test_selected_fixtures(self, prefect_harness):
        summary = verify_fixture_catalog(kinds="manifold,ds", seed=0, names=["rp2_6", "mobius_5"])
        assert summary["passed"] is True
        assert summary["kinds"] == ["manifold", "ds"]
        assert list(summary["fixtures"]) == ["mobius_5", "rp2_6"]
        rp2 = summary["fixtures"]["rp2_6"]
        assert set(rp2["checks"]) == {"2", "3"}
        assert [r["name"] for r in rp2["checks"]["2"]] == ["manifold", "ds_closed", "hprime_ds"]
        assert [r["name"] for r in rp2["checks"]["3"]] == ["manifold", "ds_closed"]

    def test_inapplicable_kind_fails_the_fixture(self, prefect_harness):
        summary = verify_fixture_catalog(kinds="h2", names=["rp2_6"])
        assert summary["passed"] is False
        assert summary["fixtures"]["rp2_6"]["validation"]["pass"] is True
