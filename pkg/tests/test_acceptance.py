"""One test per acceptance criterion; a PASS/FAIL line for each is printed
in the terminal summary and on stdout when run as a script."""

import json
import subprocess
import sys
import tempfile
import time

import pytest

from conftest import ACCEPTANCE_LINES
from graded_forms import acceptance
from cli_pipeline import pipeline


def _record(num, passed, detail):
    line = f"criterion {num}: {'PASS' if passed else 'FAIL'} ({detail})"
    ACCEPTANCE_LINES[num] = line
    print(line)


@pytest.mark.parametrize("num", [i for i, _, _ in acceptance.CRITERIA])
def test_criterion(num):
    res = acceptance.run_criterion(num)
    _record(num, res["passed"], f"{res['name']}: {res['detail']}; {res['seconds']}s")
    assert res["passed"], res["detail"]


def criterion_13():
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "graded_forms.cli", "selftest"],
                          capture_output=True, text=True, timeout=300)
    elapsed = time.perf_counter() - t0
    report = json.loads(proc.stdout)
    problems = []
    if proc.returncode != 0:
        problems.append(f"selftest exit {proc.returncode}")
    if sorted(c["id"] for c in report["criteria"]) != list(range(1, 13)):
        problems.append("report does not list criteria 1-12")
    if elapsed >= 300:
        problems.append(f"selftest took {elapsed:.0f}s")
    with tempfile.TemporaryDirectory() as tmp:
        problems += pipeline(tmp)
    detail = "; ".join(problems) if problems else f"selftest exit 0 in {elapsed:.1f}s, round trips exact"
    return not problems, detail


def test_criterion_13():
    passed, detail = criterion_13()
    _record(13, passed, f"CLI: {detail}")
    assert passed, detail


if __name__ == "__main__":
    ok = True
    for i, _, _ in acceptance.CRITERIA:
        res = acceptance.run_criterion(i)
        _record(i, res["passed"], f"{res['name']}: {res['detail']}")
        ok &= res["passed"]
    passed, detail = criterion_13()
    _record(13, passed, f"CLI: {detail}")
    sys.exit(0 if ok and passed else 1)
