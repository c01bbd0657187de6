"""Acceptance gate: one PASS/FAIL line per criterion, at its stated
tolerance, plus the selfcheck command's own guarantees."""
import subprocess
import sys

import pytest

from conftest import ACCEPTANCE_LINES
from vdwkit import acceptance, cli, retarded


@pytest.mark.parametrize("criterion", acceptance.CRITERIA, ids=lambda c: f"{c.number:02d}-{c.name}")
def test_criterion(criterion):
    outcome = acceptance.evaluate(criterion)
    print(outcome.line())
    ACCEPTANCE_LINES.append(outcome.line())
    assert outcome.passed, outcome.line()


def test_selfcheck_passes_and_is_deterministic(capsys):
    first = cli.main(["selfcheck"])
    report1 = capsys.readouterr().out
    second = cli.main(["selfcheck"])
    report2 = capsys.readouterr().out
    assert first == second == 0
    assert report1 == report2
    assert report1.count("PASS") == len(acceptance.CRITERIA)
    assert report1.endswith(f"{len(acceptance.CRITERIA)}/{len(acceptance.CRITERIA)} criteria passed\n")


def test_selfcheck_identical_across_processes():
    runs = [
        subprocess.run([sys.executable, "-m", "vdwkit", "selfcheck"], capture_output=True, check=True).stdout
        for _ in range(2)
    ]
    assert runs[0] == runs[1]


def test_tampered_constant_fails_selfcheck(monkeypatch, capsys):
    monkeypatch.setattr(retarded, "CASIMIR_POLDER_CONSTANT", 1.830423)
    code = cli.main(["selfcheck"])
    report = capsys.readouterr().out
    assert code == cli.EXIT_SELFCHECK
    assert "FAIL  2 casimir-polder-constant" in report


def test_crashing_criterion_is_reported(monkeypatch):
    def boom():
        raise RuntimeError("boom")

    outcome = acceptance.evaluate(acceptance.Criterion(99, "crash", boom))
    assert not outcome.passed and "boom" in outcome.line()
