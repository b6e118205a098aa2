"""Acceptance suite: every criterion at its stated size and time limit.

Each test prints one ``[PASS]``/``[FAIL]`` line, visible in ``pytest -v`` output.
The whole run is also timed against the five minute budget.
"""

import time

import pytest

from graphcover.selftest import run_selftest

SEED = 0
CASES = 100
BUDGET_SECONDS = 300


@pytest.fixture(scope="module")
def report():
    start = time.perf_counter()
    results = run_selftest(SEED, CASES)
    return {r.number: r for r in results}, time.perf_counter() - start


@pytest.mark.parametrize("number, minimum_cases", [
    (1, 104),   # 4 fixtures + 100 fuzz coverings, < 1 s per case
    (2, 104),   # same corpus, < 2 s per case
    (3, 100),
    (4, 50),
    (5, 50),
    (6, 150),   # skew products of criteria 3 and 4
    (7, 1050),  # 1000 walks + 50 subgroups
    (8, 20),
])
def test_criterion(report, capsys, number, minimum_cases):
    results, _ = report
    r = results[number]
    with capsys.disabled():
        print("\n" + r.line())
    assert r.cases >= minimum_cases
    assert r.passed, r.failures[:5]


def test_selftest_budget(report, capsys):
    results, seconds = report
    ok = seconds < BUDGET_SECONDS and all(r.passed for r in results.values())
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] full selftest in {seconds:.1f}s (budget {BUDGET_SECONDS}s)")
    assert seconds < BUDGET_SECONDS
