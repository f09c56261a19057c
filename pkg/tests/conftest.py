"""Session hooks: print one PASS/FAIL line per acceptance criterion."""

from __future__ import annotations

import pytest


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or item.path.name != "test_acceptance.py":
        return
    terminal = item.config.pluginmanager.getplugin("terminalreporter")
    if terminal is None:
        return
    label = item.name.removeprefix("test_").replace("_", " ")
    status = "PASS" if report.passed else "FAIL"
    terminal.write_line(f"acceptance {label}: {status} ({report.duration:.2f}s)")
