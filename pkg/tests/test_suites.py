from __future__ import annotations

import json

import pytest

from duality.constructions import unequal_blocks_npda
from duality.verify import SUITES, SuiteParameterError, UnknownSuiteError, run_suite
from duality.verify.oracles import oracle_successor

SMALL = {
    "successor-windows": {"max_n": 6},
    "addition-dpda": {"max_len": 7},
    "immerman-complement": {"max_len": 8},
    "neutral-immerman": {"max_len": 6},
    "lindstrom-plus": {"max_c": 4, "window": 2},
    "semilinear-folin": {"sets": 4, "bound": 8},
    "sort-diff": {"max_arity": 3, "bound": 6},
    "prop3-rewrite": {"max_c": 3, "window": 2},
}


def test_oracle_successor_examples():
    assert oracle_successor("11", "00")
    assert oracle_successor("00", "01")
    assert not oracle_successor("00", "10")
    with pytest.raises(ValueError):
        oracle_successor("0", "00")


@pytest.mark.parametrize("name", sorted(SMALL))
def test_small_suites_pass(name):
    report = run_suite(name, SMALL[name])
    assert report.passed, report.failures[:5]
    assert report.cases > 0
    assert report.failures == []


def test_successor_case_count():
    # pairs with different last bits: 2 * 4^(n-1) per n
    report = run_suite("successor-windows", {"max_n": 6})
    assert report.cases == sum(2 * 4 ** (n - 1) for n in range(1, 7))


def test_npda_mismatches_are_unequal_block_words():
    report = run_suite("npda-A", {"max_len": 9})
    assert not report.passed
    unequal = unequal_blocks_npda()
    for f in report.failures:
        assert (f["expected"], f["actual"]) == ("False", "True")
        assert unequal.accepts(f["input"])


def test_reports_are_deterministic(monkeypatch):
    first = run_suite("immerman-complement", {"max_len": 7}).to_json(timing=False)
    monkeypatch.setenv("DUALITY_THREADS", "1")
    second = run_suite("immerman-complement", {"max_len": 7}).to_json(timing=False)
    assert first == second
    assert "millis" not in json.loads(first)


def test_failures_are_sorted_and_truncated():
    report = run_suite("npda-A", {"max_len": 10})
    assert report.failure_count > 100
    assert len(report.failures) == 100
    inputs = [f["input"] for f in report.failures]
    assert inputs == sorted(inputs)


def test_parameter_errors():
    with pytest.raises(UnknownSuiteError):
        run_suite("nope", {})
    with pytest.raises(SuiteParameterError):
        run_suite("sort-diff", {"max_n": 3})
    with pytest.raises(SuiteParameterError):
        run_suite("addition-dpda", {"max_len": 0})


def test_every_suite_has_defaults_in_range():
    for name, (_build, defaults, ranges) in SUITES.items():
        for key, (lo, hi) in ranges.items():
            assert lo <= defaults[key] <= hi, name
