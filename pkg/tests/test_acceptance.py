"""The acceptance gate: every criterion runs at its stated tolerance and
prints one pass/fail line.  Run with ``pytest tests/test_acceptance.py -v``
or ``secclasses selftest``."""

import pytest

from secclasses.acceptance import CRITERIA


@pytest.mark.parametrize("name,criterion", CRITERIA,
                         ids=[name for name, _ in CRITERIA])
def test_criterion(name, criterion):
    ok, detail = criterion()
    print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    assert ok, f"{name}: {detail}"
