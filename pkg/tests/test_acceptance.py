"""Acceptance gate: run every self-check criterion, one test per item.

The criteria registry in charvar.selftest is the single source of
truth; this file only reports it through pytest.  Each parametrized
test prints one [PASS]/[FAIL] line and fails iff its criterion fails,
so `pytest tests/test_acceptance.py -v` reads as the acceptance
checklist.

Known state: criteria 2 and 4 compare the pipeline against externally
transcribed closed forms for n = 4 whose source contains misprints
(see tests/test_golden.py for the pinned differences, including a
fractional constant term in the transcribed SL(4) form at s=2 that no
E-polynomial can have).  Those two criteria therefore fail against the
transcription while the pipeline remains internally consistent and
brute-force-verified; the failures are reported honestly rather than
patched over.
"""

import pytest

from charvar.selftest import criterion_numbers, run_criteria


@pytest.fixture(scope="module")
def results():
    return {res.number: res for res in run_criteria()}


@pytest.mark.parametrize(
    "number", criterion_numbers(), ids=[f"criterion-{n:02d}" for n in criterion_numbers()]
)
def test_criterion(results, number):
    res = results[number]
    flag = "PASS" if res.passed else "FAIL"
    line = f"[{flag}] {res.number:>2}. {res.title} ({res.seconds}s)"
    print(line)
    assert res.passed, f"{line}\n    {res.detail}"
