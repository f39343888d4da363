"""
Tests for DOT rendering and the suite runner.
"""

import pytest

from grow import build_tree
from schemas import CheckResult
from services import ALIASES, SUITES, SuiteRunner, dynkin_to_dot, emit_dot, tree_to_dot


def test_dynkin_b2():
    text = dynkin_to_dot(((2, -1), (-2, 2)), "B2")
    assert text.startswith("graph B2 {")
    assert '1 -- 2 [dir=forward, label="x2"];' in text


def test_dynkin_simply_laced():
    text = dynkin_to_dot(((2, -1, 0), (-1, 2, -1), (0, -1, 2)), "A3")
    assert "1 -- 2;" in text
    assert "2 -- 3;" in text
    assert "dir=forward" not in text


def test_tree_dot_single_node():
    text = tree_to_dot(build_tree(1))
    assert '"A1";' in text
    assert "->" not in text


def test_tree_dot_labels():
    text = emit_dot(build_tree(4))
    assert '"A3" -> "D4" [label="wedge2, λ=q^(-1)"];' in text
    assert '"A1" -> "A2" [label="rank induction, cited", style=dashed];' in text


def test_runner_available():
    names = SuiteRunner().available()
    assert names[:len(SUITES)] == list(SUITES)
    assert names[-1] == "all"


def test_runner_lists_acceptance_suites_first():
    names = SuiteRunner().available()
    assert names[:8] == ["prop31", "prop32", "prop33", "prop34", "thm31", "thm32", "thm33", "prop41"]
    assert set(ALIASES) <= set(names)


def test_aliases_only_use_registered_builders():
    registered = {b for builders in SUITES.values() for b in builders}
    for builders in ALIASES.values():
        assert set(builders) <= registered


def test_runner_all_runs_each_builder_once():
    calls = []

    def first():
        calls.append("first")
        return [CheckResult(name="one", passed=True)]

    def second():
        calls.append("second")
        return [CheckResult(name="two", passed=True)]

    runner = SuiteRunner(suites={"a": (first,), "b": (first, second)}, aliases={"both": (second, first)})
    report = runner.run("all")
    assert calls == ["first", "second"]
    assert [r.name for r in report.results] == ["a: one", "b: two"]
    calls.clear()
    assert [r.name for r in runner.run("both").results] == ["b: two", "a: one"]


def test_runner_unknown_suite():
    with pytest.raises(ValueError, match="Available"):
        SuiteRunner().run("nope")


def test_runner_pairing_suite():
    report = SuiteRunner().run("pairing")
    assert report.passed
    assert all(r.name.startswith("prop31: ") for r in report.results)
    assert report.failures == []
    assert all(r.seconds is not None for r in report.results)


def test_runner_turns_exceptions_into_failures():
    def broken():
        raise ArithmeticError("division by zero")

    def fine():
        return [CheckResult(name="fine", passed=True)]

    report = SuiteRunner(suites={"mixed": (broken, fine)}).run("mixed")
    assert not report.passed
    assert [r.name for r in report.failures] == ["mixed: broken"]
    assert "ArithmeticError" in report.failures[0].detail
    assert report.results[-1].passed
