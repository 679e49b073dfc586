"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

import pytest

from girth7.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion-{c.number}" for c in CRITERIA])
def test_criterion(criterion, capsys):
    outcome = run_criterion(criterion)
    with capsys.disabled():
        print("\n" + outcome.line())
    assert outcome.ok, outcome.detail
    assert outcome.within_budget, f"{outcome.seconds:.2f}s exceeds the {outcome.budget:g}s budget"
