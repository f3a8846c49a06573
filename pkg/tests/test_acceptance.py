"""Acceptance gate: one test per criterion, full sample counts.

Each criterion runs its verification suite at 10^4 random instances
(indices within +-20, set thresholds <= 8, periods <= 6, families of at
most 16 members) under a fixed seed, and prints one PASS/FAIL line.
Run with ``pytest -v`` (or ``-s`` to watch the lines appear).
"""

import time

import pytest

from epshift.selftest import (SUITES, SuiteOptions, SuiteResult)

ACCEPTANCE_SEED = 7
SAMPLES = 10_000

CRITERIA = [
    (1, "associativity over fixed and random closed families",
     "associativity"),
    (2, "inverse axioms, inverse uniqueness, commuting idempotents",
     "inverse-axioms"),
    (3, "natural order criterion vs definitional product check",
     "natural-order"),
    (4, "Green criteria vs witnesses, sweeps, and brute scans",
     "green"),
    (5, "product formula vs pointwise window composition at width 128",
     "oracle"),
    (6, "classification golden cases and cross-validation",
     "classification"),
    (7, "morphism suites: quotient, pair, matrix-unit, triple, reindexing",
     "morphisms"),
    (8, "closure verification and shift-containment brute scans",
     "family-machinery"),
]

_timings = {}


def _run(number, title, suite) -> SuiteResult:
    opts = SuiteOptions(samples=SAMPLES, seed=ACCEPTANCE_SEED, window=128)
    start = time.perf_counter()
    result = SUITES[suite](opts)
    _timings[suite] = time.perf_counter() - start
    verdict = "PASS" if result.passed else "FAIL"
    print(f"criterion {number} ({title}): {verdict} "
          f"[{result.checks} checks, {result.failures} failures, "
          f"{_timings[suite]:.1f}s]")
    return result


@pytest.mark.parametrize("number,title,suite", CRITERIA,
                         ids=[f"criterion-{n}-{s}" for n, _, s in CRITERIA])
def test_acceptance_criterion(number, title, suite):
    result = _run(number, title, suite)
    assert result.failures == 0, (
        f"criterion {number} failed {result.failures}/{result.checks} "
        f"checks; first failure: {result.first_failure}")


def test_acceptance_total_runtime_report():
    total = sum(_timings.values())
    print(f"acceptance suites total runtime: {total:.1f}s "
          f"(target < 60s on a desktop machine)")
    assert len(_timings) == len(CRITERIA)
