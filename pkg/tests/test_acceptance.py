"""Acceptance gate: one test per criterion, at its stated tolerance.

Each test runs the corresponding verification suite (the same code path
as `scatterkit verify --suite <name>`), prints a single pass/fail line
and enforces the runtime budget.  Everything is exact; there are no
numeric tolerances in this package.
"""

import pytest

from scatterkit.verify import run_suite

BUDGETS = {
    "ordinal-laws": 5.0,
    "classifier": 10.0,
    "cb-rank": 10.0,
    "prop24": 120.0,
    "full-transitivity": 120.0,
    "flows": 60.0,
    "iso-oracle": 5.0,
    "remark19": 60.0,
}

CRITERIA = [
    ("ordinal-laws", "criterion 1: ordinal arithmetic laws on 10000 seeded triples"),
    ("classifier", "criterion 2: classifier idempotence, commutation and grid non-redundancy"),
    ("cb-rank", "criterion 3: derived types and point ranks vs the one-step oracle"),
    ("prop24", "criterion 4: encoding check on all graphs <= 5 vertices plus 100 random"),
    ("full-transitivity", "criterion 5: both transitivity methods on all topologies <= 4 points"),
    ("flows", "criterion 6: LO sizes, simple transitivity and product flows"),
    ("iso-oracle", "criterion 7: isomorphism oracle decision table over the grid"),
    ("remark19", "criterion 8: normal-subgroup census against the candidate list"),
]


@pytest.mark.parametrize("suite,label", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_acceptance(suite, label):
    result = run_suite(suite)[0]
    status = "PASS" if result.ok else "FAIL"
    print(f"{status} {label} ({result.seconds:.2f}s)")
    for line in result.lines:
        print(f"    {line}")
    assert result.ok, f"{label}: " + "; ".join(l for l in result.lines if l.startswith("FAIL"))
    assert result.seconds < BUDGETS[suite], (
        f"{label} took {result.seconds:.2f}s, budget {BUDGETS[suite]}s"
    )
