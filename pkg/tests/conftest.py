from __future__ import annotations

import re

import pytest

_RESULTS: dict[int, tuple[str, str]] = {}
_NAME = re.compile(r"test_criterion_(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    m = _NAME.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        k = int(m.group(1))
        # parametrized criteria pass only if every case passes
        if _RESULTS.get(k, ("", "PASS"))[1] != "PASS":
            status = _RESULTS[k][1]
        _RESULTS[k] = (m.group(2).replace("_", " "), status)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_RESULTS):
        label, status = _RESULTS[k]
        terminalreporter.write_line(f"criterion {k:2d} {status}  {label}")
