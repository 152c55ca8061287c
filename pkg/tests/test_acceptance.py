"""Acceptance suite: one test per shipped criterion, each printing a
PASS/FAIL line with its runtime and asserting the stated time budget."""

import pytest

from bscells.verify import run_suite

# criterion number -> (check name, time budget in seconds)
CRITERIA = {
    1: ("minor-functions-golden", 5.0),
    2: ("forced-zero-sets", 1.0),
    3: ("positivity-flags", 1.0),
    4: ("chart-sections-golden", 1.0),
    5: ("cell-characterizations", 10.0),
    6: ("positive-mask-counts", 30.0),
    7: ("length-bound", 30.0),
    8: ("alternating-product-collapse", 10.0),
    9: ("flag-equivalence", 20.0),
    10: ("monomial-identity", 60.0),
    11: ("inverse-consistency", 30.0),
    12: ("minor-translation-identities", 5.0),
    13: ("torus-weights", 5.0),
    14: ("dictionary", 30.0),
}


@pytest.mark.parametrize(
    "criterion",
    sorted(CRITERIA),
    ids=[f"criterion-{c:02d}-{CRITERIA[c][0]}" for c in sorted(CRITERIA)],
)
def test_criterion(criterion):
    name, budget = CRITERIA[criterion]
    result = run_suite(names=[name])[0]
    status = "PASS" if result.passed else "FAIL"
    print(f"{status} criterion {criterion}: {result.name} ({result.seconds:.2f}s) {result.detail}")
    for finding in result.findings:
        print(f"     finding: {finding}")
    assert result.passed, f"criterion {criterion} failed: {result.detail}; {result.findings}"
    assert result.seconds < budget, (
        f"criterion {criterion} exceeded its budget: {result.seconds:.2f}s >= {budget}s"
    )


def test_criteria_6_and_7_shared_budget():
    results = run_suite(names=["positive-mask-counts", "length-bound"])
    assert all(r.passed for r in results)
    assert sum(r.seconds for r in results) < 30.0
