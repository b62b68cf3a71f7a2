"""Acceptance criteria, one test each, at the full stated scale.

Each test prints one PASS/FAIL line; conftest.py repeats the verdicts in
the terminal summary.  Criterion 5 is expected to fail (see README).
"""
from __future__ import annotations

import time
from pathlib import Path

import pytest

from duality.constructions import (
    FORBIDDEN_WINDOWS, complement_decomposition_member, immerman_member, in_A, npda_for_A,
)
from duality.semilinear import is_stratified
from duality.verify import SUITES, run_suite

GOLDEN = Path(__file__).parent / "golden"
_REPORTS: dict = {}


def _run(name: str, params: dict | None = None):
    merged = {**SUITES[name][1], **(params or {})}
    key = (name, tuple(sorted(merged.items())))
    if key not in _REPORTS:
        started = time.perf_counter()
        report = run_suite(name, merged)
        _REPORTS[key] = (report, time.perf_counter() - started)
    return _REPORTS[key]


def _line(k: int, ok: bool, detail: str) -> None:
    print(f"\ncriterion {k} {'PASS' if ok else 'FAIL'}: {detail}")


def test_criterion_1_successor_window_claim():
    report, secs = _run("successor-windows", {"max_n": 10})
    ok = report.passed and secs < 60
    _line(1, ok, f"{report.cases} pairs, {report.failure_count} failures, {secs:.1f}s")
    assert report.passed, report.failures[:5]
    assert secs < 60


def test_criterion_2_forbidden_set_fidelity():
    text = "\n".join(FORBIDDEN_WINDOWS) + "\n"
    golden = (GOLDEN / "forbidden_windows.txt").read_bytes()
    ok = text.encode() == golden and len(set(FORBIDDEN_WINDOWS)) == 8
    _line(2, ok, f"F = {{{', '.join(FORBIDDEN_WINDOWS)}}}")
    assert ok


def test_criterion_3_addition_dpda():
    report, secs = _run("addition-dpda", {"max_len": 12})
    ok = report.passed and secs < 120
    _line(3, ok, f"{report.cases} structures, {report.failure_count} failures, {secs:.1f}s")
    assert report.passed, report.failures[:5]
    assert secs < 120


COMPLEMENT_GOLDEN = {
    # word: (in A, in the complement of L_I)
    "00a01a11a11a": (True, True),
    "a": (False, True),
    "0a1a0a1": (False, True),
    "01a10a11a00": (False, True),
    "00a01a10a11a00a01": (False, True),
    "00a01001a10a11": (False, True),
}


def test_criterion_4_complement_decomposition():
    report, secs = _run("immerman-complement", {"max_len": 14})
    golden_ok = all(
        (in_A(w), complement_decomposition_member(w)) == want for w, want in COMPLEMENT_GOLDEN.items()
    )
    ok = report.passed and secs < 600 and golden_ok
    _line(4, ok, f"{report.cases} words, {report.failure_count} failures, {secs:.1f}s, "
                 f"listed words {'ok' if golden_ok else 'wrong'}")
    assert golden_ok
    assert report.passed, report.failures[:5]
    assert secs < 600


def test_criterion_5_npda_for_A():
    # A is not context free, so no pushdown automaton can meet this; the
    # machine accepts A plus words whose adjacent blocks differ in length.
    report, secs = _run("npda-A", {"max_len": 12})
    examples_ok = npda_for_A().accepts("00a01a11a11a")
    _line(5, report.passed, f"{report.cases} words, {report.failure_count} failures, {secs:.1f}s")
    assert examples_ok
    assert report.passed, report.failures[:5]


def test_criterion_6_neutral_letter_chain():
    report, secs = _run("neutral-immerman", {"max_len": 12})
    _line(6, report.passed, f"{report.cases} words, {report.failure_count} failures, {secs:.1f}s")
    assert report.passed, report.failures[:5]


def test_criterion_7_immerman_examples():
    words = ["00a01a10a11", "000a001a010a011a100a101a110a111"]
    ok = all(immerman_member(w) for w in words)
    _line(7, ok, ", ".join(words))
    assert ok


def test_criterion_8_lindstrom_plus():
    report, secs = _run("lindstrom-plus", {"max_c": 8})
    _line(8, report.passed, f"{report.cases} cases, {report.failure_count} failures, {secs:.1f}s")
    assert report.passed, report.failures[:5]


STRATIFICATION_GOLDEN = [
    ([(1, 1, 1)], False),
    ([(1, 1, 0, 0), (0, 0, 1, 1)], True),
    ([(1, 0, 1, 0), (0, 1, 0, 1)], False),
]


def test_criterion_9_stratification():
    got = [is_stratified(p) for p, _want in STRATIFICATION_GOLDEN]
    ok = got == [want for _p, want in STRATIFICATION_GOLDEN]
    _line(9, ok, f"verdicts {got}")
    assert ok


def test_criterion_10_sort_diff_round_trip():
    report, secs = _run("sort-diff", {"max_arity": 4, "bound": 10})
    _line(10, report.passed, f"{report.cases} tuples, {report.failure_count} failures, {secs:.1f}s")
    assert report.passed, report.failures[:5]


def test_criterion_11_emit_folin():
    report, secs = _run("semilinear-folin", {"sets": 20, "bound": 12})
    _line(11, report.passed, f"{report.cases} tuples, {report.failure_count} failures, {secs:.1f}s")
    assert report.passed, report.failures[:5]


def test_criterion_12_prop3_rewriting():
    report, secs = _run("prop3-rewrite", {"max_c": 6, "window": 4})
    _line(12, report.passed, f"{report.cases} cases, {report.failure_count} failures, {secs:.1f}s")
    assert report.passed, report.failures[:5]


@pytest.mark.parametrize("name", list(SUITES))
def test_criterion_13_determinism(name):
    first, _ = _run(name)
    second = run_suite(name)
    same = first.to_json(timing=False) == second.to_json(timing=False)
    print(f"\n  {name}: {'identical' if same else 'DIFFERENT'}")
    assert same
