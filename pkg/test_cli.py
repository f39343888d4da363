"""
Tests for the command-line interface.
"""

import importlib
import json

import pytest
from click.testing import CliRunner

from app import cli
from config import settings


def invoke(*args):
    return CliRunner().invoke(cli, list(args))


def test_grow_vector_b2():
    result = invoke("grow", "--n", "2", "--rep", "vector")
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["cartan"] == [[2, -1], [-2, 2]]
    assert report["target"] == "B2"
    assert "lambda" in report
    assert report["matches_reference"] is True
    assert report["mu"]["central"] == "0/1"
    assert len(report["mu"]["coords"]) == 1
    assert report["alpha_n"]["coords"] == report["mu"]["coords"]
    assert report["alpha_n"]["central"] == report["vnorm"]


def test_grow_wedge2_needs_n_four():
    result = invoke("grow", "--n", "3", "--rep", "wedge2")
    assert result.exit_code == 2
    assert "wedge2 requires n ≥ 4" in result.output


def test_grow_unknown_rep():
    result = invoke("grow", "--n", "3", "--rep", "adjoint")
    assert result.exit_code == 2


def test_grow_writes_files(tmp_path):
    json_path = tmp_path / "d4.json"
    dot_path = tmp_path / "d4.dot"
    result = invoke("grow", "--n", "4", "--rep", "wedge2", "--json", str(json_path), "--dot", str(dot_path))
    assert result.exit_code == 0, result.output
    report = json.loads(json_path.read_text(encoding="utf-8"))
    assert report["cartan"][3] == [0, -1, 0, 2]
    assert report["lambda"]["text"] == "q^(-1)"
    assert dot_path.read_text(encoding="utf-8").startswith("graph D4 {")


def test_rmatrix_vector():
    result = invoke("rmatrix", "--n", "2", "--rep", "vector")
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["dim"] == 2
    assert report["branch"] == "hecke"
    assert len(report["eigenvalues"]) == 2
    assert report["checks"]
    assert all(check["passed"] for check in report["checks"])


def test_radical_degree_three():
    result = invoke("radical", "--n", "2", "--degree", "3", "--braiding", "star")
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["pairing_rank"] == 6
    assert len(report["right_radical"]) == 2
    assert len(report["left_radical"]) == 2
    assert report["excess"] is True
    assert all(check["passed"] for check in report["checks"])


def test_radical_rejects_degree_zero():
    result = invoke("radical", "--n", "2", "--degree", "0")
    assert result.exit_code == 2


def test_verify_list():
    result = invoke("verify", "--list")
    assert result.exit_code == 0
    names = result.stdout.split()
    assert "pairing" in names
    assert names[-1] == "all"


def test_verify_unknown_suite():
    result = invoke("verify", "--suite", "nope")
    assert result.exit_code == 2
    assert "Available" in result.output


def test_verify_pairing_suite(tmp_path):
    path = tmp_path / "suite.json"
    result = invoke("verify", "--suite", "pairing", "--json", str(path))
    assert result.exit_code == 0, result.output
    assert "PASS" in result.stdout
    assert json.loads(path.read_text(encoding="utf-8"))["passed"] is True


def test_tree_single_node():
    result = invoke("tree", "--max-rank", "1")
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["nodes"] == ["A1"]
    assert report["edges"] == []


def test_tree_dot(tmp_path):
    path = tmp_path / "tree.dot"
    result = invoke("tree", "--max-rank", "4", "--dot", str(path))
    assert result.exit_code == 0, result.output
    text = path.read_text(encoding="utf-8")
    assert '"A3" -> "D4"' in text
    edges = {(e["source"], e["target"]) for e in json.loads(result.stdout)["edges"]}
    assert ("A1", "B2") in edges


@pytest.mark.parametrize("suite", ["prop31", "prop32", "prop33", "prop34", "thm31", "thm32", "thm33", "prop41"])
def test_verify_named_suites(suite):
    result = invoke("verify", "--suite", suite)
    assert result.exit_code == 0, result.output
    rows = [line for line in result.stdout.splitlines() if line.startswith(("PASS", "FAIL"))]
    assert rows
    assert all(f"  {suite}: " in row for row in rows)


def test_verify_all():
    result = invoke("verify", "--suite", "all")
    assert result.exit_code == 0, result.output
    assert "FAIL" not in result.stdout
    for suite in ("prop31", "prop34", "thm33", "prop41"):
        assert f"  {suite}: " in result.stdout


def test_size_cap_from_environment(monkeypatch):
    module = importlib.import_module("config.settings")
    monkeypatch.setenv("QGROW_SIZE_CAP", "8")
    try:
        reloaded = importlib.reload(module)
        assert reloaded.settings.QGROW_SIZE_CAP == 8
        monkeypatch.setattr(settings, "QGROW_SIZE_CAP", reloaded.settings.QGROW_SIZE_CAP)
        assert invoke("radical", "--n", "2", "--degree", "3").exit_code == 0
        result = invoke("radical", "--n", "3", "--degree", "3")
        assert result.exit_code == 1
        assert "cap is 8" in result.output
    finally:
        monkeypatch.undo()
        importlib.reload(module)
