"""End-to-end tests for the CLI commands and exit codes."""

import json
from pathlib import Path

import pytest
from mm_clikit import TyperPlus
from typer.testing import CliRunner

from mb_fqcount.cli import app
from mb_fqcount.config import ENV_WORK_CAP, ENV_WORKERS

runner = CliRunner()


@pytest.fixture(autouse=True)
def clean_env(monkeypatch: pytest.MonkeyPatch):
    """Environment overrides start unset."""
    monkeypatch.delenv(ENV_WORK_CAP, raising=False)
    monkeypatch.delenv(ENV_WORKERS, raising=False)


@pytest.fixture
def invoke(tmp_path: Path):
    """Run the app against a temporary data directory."""

    def run(*args: str):
        return runner.invoke(app, ["--data-dir", str(tmp_path), *args])

    return run


class TestCount:
    """count."""

    def test_json(self, invoke):
        """x1 + x2^2 = 0 over GF(5)."""
        result = invoke("count", "--field", "5", "--eq", "diag a=1,1 m=1,2")
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["value"] == 5
        assert data["method"] == "thm1"

    def test_tsv(self, invoke):
        """Header plus one row."""
        result = invoke("-o", "tsv", "count", "--field", "3^2", "--eq", "carlitz a=1,1,1 m=1,1,1 k=2 b=1 kv=1,1,1")
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0].split("\t") == ["q", "n", "value", "method", "restricted", "hypotheses"]
        assert lines[1].split("\t")[:5] == ["9", "3", "82", "thm2", "0"]

    def test_restricted(self, invoke):
        """N* by enumeration when no closed form applies."""
        result = invoke("count", "--field", "5", "--eq", "diag a=1,1 m=2,2", "--restricted")
        assert result.exit_code == 0
        assert json.loads(result.stdout)["value"] == 8

    def test_parse_error(self, invoke):
        """Malformed equation exits 2."""
        result = invoke("count", "--field", "5", "--eq", "diag a=1,1")
        assert result.exit_code == 2

    def test_work_cap(self, invoke):
        """Enumeration above --cap exits 3."""
        result = invoke("--cap", "10", "count", "--field", "5", "--eq", "diag a=1,1 m=2,2")
        assert result.exit_code == 3

    def test_env_work_cap(self, invoke, monkeypatch: pytest.MonkeyPatch):
        """FQCOUNT_CAP mirrors --cap."""
        monkeypatch.setenv(ENV_WORK_CAP, "10")
        result = invoke("count", "--field", "5", "--eq", "diag a=1,1 m=2,2")
        assert result.exit_code == 3

    def test_bad_env(self, invoke, monkeypatch: pytest.MonkeyPatch):
        """A malformed environment override exits 2."""
        monkeypatch.setenv(ENV_WORKERS, "lots")
        result = invoke("count", "--field", "5", "--eq", "diag a=1,1 m=1,2")
        assert result.exit_code == 2

    def test_field_too_large(self, invoke):
        """Fields above the cap exit 3."""
        result = invoke("count", "--field", "2^30", "--eq", "diag a=1,1 m=1,1")
        assert result.exit_code == 3

    def test_no_formula(self, invoke):
        """force-formula without an applicable formula exits 4."""
        result = invoke("count", "--field", "5", "--eq", "diag a=1,1 m=2,2", "--method", "force-formula")
        assert result.exit_code == 4


class TestVerify:
    """verify."""

    def test_match(self, invoke):
        """Classical equation over GF(5)."""
        result = invoke("verify", "--field", "5", "--eq", "carlitz a=1,1,1 m=1,1,1 k=2 b=2 kv=1,1,1")
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["formula_value"] == data["brute_value"] == 26
        assert data["match"] is True

    def test_no_formula(self, invoke):
        """No formula is not a failure."""
        result = invoke("verify", "--field", "5", "--eq", "diag a=1,1 m=2,2")
        assert result.exit_code == 0
        assert json.loads(result.stdout)["match"] is None

    def test_mismatch(self, invoke, monkeypatch: pytest.MonkeyPatch):
        """A disagreeing enumeration exits 1."""
        monkeypatch.setattr("mb_fqcount.commands.verify.count_solutions", lambda *args, **kwargs: 0)
        result = invoke("verify", "--field", "5", "--eq", "diag a=1,1 m=1,2")
        assert result.exit_code == 1
        assert json.loads(result.stdout)["match"] is False


class TestSweep:
    """sweep."""

    def test_tsv(self, invoke):
        """One row per field."""
        result = invoke("-o", "tsv", "sweep", "--q-list", "3,5", "--n-range", "3")
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0].startswith("q\tn\tequation")
        assert [line.split("\t")[0] for line in lines[1:]] == ["3", "5"]
        assert all(line.split("\t")[-1] == "1" for line in lines[1:])

    def test_json_lines(self, invoke):
        """One JSON object per row."""
        result = invoke("sweep", "--q-list", "5", "--n-range", "2-3", "--family", "diag", "--instances", "2")
        assert result.exit_code == 0
        rows = [json.loads(line) for line in result.stdout.splitlines()]
        assert [row["n"] for row in rows] == [2, 2, 3, 3]

    def test_empty_range(self, invoke):
        """hi < lo exits 2."""
        result = invoke("sweep", "--q-list", "5", "--n-range", "3-2")
        assert result.exit_code == 2


class TestBijectionCheck:
    """bijection-check."""

    def test_diagonal(self, invoke):
        """x1 + 6*x2^3 over GF(7) passes."""
        result = invoke("bijection-check", "--field", "7", "--eq", "diag a=1,6 m=1,3")
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["passed"] is True
        assert len(data["certificates"]) == 6

    def test_classical(self, invoke):
        """Nonzero fibers of the classical equation partition (F_5*)^3."""
        result = invoke("bijection-check", "--field", "5", "--eq", "carlitz a=1,1,1 m=1,1,1 k=2 b=1 kv=1,1,1")
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert sum(data["fiber_sizes"].values()) == 64

    def test_no_map(self, invoke):
        """No pivot variable exits 4 after printing the identities."""
        result = invoke("bijection-check", "--field", "5", "--eq", "diag a=1,1 m=2,2")
        assert result.exit_code == 4
        assert json.loads(result.stdout)["maps_available"] is False

    def test_oversize(self, invoke):
        """Fiber enumeration above the cap exits 3."""
        result = invoke("--cap", "100", "bijection-check", "--field", "7", "--eq", "diag a=1,6 m=1,3")
        assert result.exit_code == 3


class TestShowElements:
    """show-elements."""

    def test_gf4(self, invoke):
        """Index and polynomial of every element."""
        result = invoke("show-elements", "--field", "2^2")
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["modulus"] == [1, 1, 1]
        assert [e["poly"] for e in data["elements"]] == ["0", "1", "a", "1+a"]

    def test_tsv(self, invoke):
        """Two columns."""
        result = invoke("-o", "tsv", "show-elements", "--field", "3")
        assert result.stdout.splitlines() == ["index\tpoly", "0\t0", "1\t1", "2\t2"]


class TestApp:
    """Top-level options."""

    def test_typer_plus(self):
        """The app carries the package name for its version option."""
        assert isinstance(app, TyperPlus)

    def test_verbose(self, invoke):
        """--verbose leaves the report on stdout unchanged."""
        result = invoke("--verbose", "-o", "tsv", "show-elements", "--field", "3")
        assert result.exit_code == 0
        assert "index\tpoly" in result.stdout.splitlines()
