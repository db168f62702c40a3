"""Tests for the face-numbers command line."""

import json

import pytest

from src.cli import build_parser, load_input, main, verify_catalog_cli
from src.exceptions import BadParams, ValidationFailure
from src.operations.complex_ops import read_fct
from src.operations.generator_ops import cyclic_polytope_boundary


def _write_bowtie(tmp_path):
    path = tmp_path / "bowtie.fct"
    path.write_text("# two triangles sharing a vertex\n1 2 3\n1 4 5\n", encoding="utf-8")
    return path


class TestParser:
    """Test argument parsing."""

    def test_defaults_come_from_settings(self):
        args = build_parser().parse_args(["vectors", "torus_7"])
        assert args.field == "2"
        assert args.seed == 0
        assert args.output_format == "json"

    def test_unknown_kind_is_usage_error(self, capsys):
        assert main(["check", "nonsense", "torus_7"]) == 2

    def test_load_input_prefers_files(self, tmp_path, torus):
        path = tmp_path / "t.fct"
        path.write_text("1 2 3\n", encoding="utf-8")
        assert load_input(str(path)).n == 3
        assert load_input("torus_7") == torus


class TestVectorsAndInfo:
    """Test the read-only commands."""

    def test_vectors_json(self, capsys):
        assert main(["vectors", "torus_7"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["pass"] is True
        assert report["data"]["h_prime"] == [1, 4, 10, 1]
        assert report["data"]["h_dprime"] == [1, 4, 4, 1]

    def test_vectors_text_shows_gbar(self, capsys):
        assert main(["vectors", "mobius_5", "--format", "text"]) == 0
        out = capsys.readouterr().out
        assert "h′ = (1, 2, 3, 0)" in out
        assert "ḡ  = (1, 2, -2, 0)" in out

    def test_info_on_file(self, tmp_path, capsys):
        assert main(["info", str(_write_bowtie(tmp_path)), "--format", "text"]) == 0
        out = capsys.readouterr().out
        assert "n: 5" in out
        assert "f: (1, 5, 6, 2)" in out

    def test_bad_field(self, capsys):
        assert main(["vectors", "torus_7", "--field", "4"]) == 2
        assert "field must be p or p^m" in capsys.readouterr().err

    def test_unknown_input(self, capsys):
        assert main(["vectors", "klein_bottle"]) == 2


class TestCheck:
    """Test exit codes and reports of the check command."""

    def test_passing_check(self, capsys):
        assert main(["check", "ds", "torus_7", "--field", "5"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["kind"] == "ds"
        assert [c["name"] for c in report["checks"]] == ["ds_closed", "hprime_ds"]
        assert all(c["pass"] for c in report["checks"])

    def test_failing_check(self, tmp_path, capsys):
        assert main(["check", "manifold", str(_write_bowtie(tmp_path))]) == 1
        report = json.loads(capsys.readouterr().out)
        assert report["pass"] is False

    def test_precondition_failure(self, tmp_path, capsys):
        assert main(["check", "ds", str(_write_bowtie(tmp_path))]) == 1
        assert "NotAManifold" in capsys.readouterr().err

    def test_report_to_file(self, tmp_path, capsys):
        target = tmp_path / "report.json"
        assert main(["check", "bounds", "rp2_6", "-o", str(target)]) == 0
        assert capsys.readouterr().out == ""
        report = json.loads(target.read_text(encoding="utf-8"))
        assert report["pass"] is True
        assert report["field"] == "2"


class TestGen:
    """Test the gen command."""

    def test_prints_fct(self, capsys):
        assert main(["gen", "octahedron"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("# octahedron\n")
        assert len(out.strip().splitlines()) == 9

    def test_writes_fct(self, tmp_path, capsys):
        target = tmp_path / "c84.fct"
        assert main(["gen", "cyclic", "--d", "4", "--n", "8", "-o", str(target)]) == 0
        assert read_fct(target) == cyclic_polytope_boundary(8, 4)
        report = json.loads(capsys.readouterr().out)
        assert report["data"]["f"] == [1, 8, 28, 40, 20]

    def test_missing_parameter(self, capsys):
        assert main(["gen", "stacked", "--d", "3"]) == 2
        assert "--n" in capsys.readouterr().err


class TestVerifyCatalogCli:
    """Test the exit codes of the catalog entry point."""

    def test_toolkit_error_exits_one(self, monkeypatch, capsys):
        def failing(**kwargs):
            raise ValidationFailure("rp2_6: Betti numbers differ")

        monkeypatch.setattr("sys.argv", ["face-numbers-verify-catalog"])
        monkeypatch.setattr("src.flows.verify_catalog.verify_fixture_catalog", failing)
        assert verify_catalog_cli() == 1
        assert "Betti numbers differ" in capsys.readouterr().err

    def test_usage_error_exits_two(self, monkeypatch):
        def failing(**kwargs):
            raise BadParams("unknown check kind 'x'")

        monkeypatch.setattr("sys.argv", ["face-numbers-verify-catalog", "--kinds", "x"])
        monkeypatch.setattr("src.flows.verify_catalog.verify_fixture_catalog", failing)
        assert verify_catalog_cli() == 2

    def test_programming_errors_propagate(self, monkeypatch):
        def broken(**kwargs):
            raise KeyError("fixtures")

        monkeypatch.setattr("sys.argv", ["face-numbers-verify-catalog"])
        monkeypatch.setattr("src.flows.verify_catalog.verify_fixture_catalog", broken)
        with pytest.raises(KeyError):
            verify_catalog_cli()
