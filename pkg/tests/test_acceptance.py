"""Acceptance gate: each check runs at full size within its time budget
and prints a single PASS/FAIL line."""

import time

import pytest

from gwa import selftest


BUDGETS = {
    "worked-example": 1.0,
    "ring-relations": 120.0,
    "hilbert-series": 10.0,
    "jordan-tensor": 10.0,
    "oracle-agreement": 300.0,
    "semisimple-section": 30.0,
    "split-quotient": 30.0,
    "graph-tensor": 60.0,
    "ring-axioms": 60.0,
}


def _run(name, fn, budget):
    t0 = time.monotonic()
    try:
        ok, detail = fn(quick=False)
    except TypeError:
        ok, detail = fn()
    elapsed = time.monotonic() - t0
    status = "PASS" if ok and elapsed <= budget else "FAIL"
    print(f"{status} {name} ({elapsed:.1f}s <= {budget:.0f}s): {detail}")
    assert ok, f"{name}: {detail}"
    assert elapsed <= budget, \
        f"{name} took {elapsed:.1f}s, budget {budget:.0f}s"


@pytest.mark.parametrize("name,fn",
                         selftest.CHECKS,
                         ids=[name for name, _ in selftest.CHECKS])
def test_acceptance(name, fn):
    _run(name, fn, BUDGETS[name])
