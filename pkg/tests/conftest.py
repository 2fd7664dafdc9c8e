"""Shared pytest plumbing.

The acceptance tests register one line each; the terminal summary
prints the whole block so the per-criterion verdicts are visible even
when output capture is on.
"""

import pytest


def pytest_configure(config):
    config._criterion_lines = {}


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for one numbered acceptance criterion."""

    def record(number: int, name: str, passed: bool, detail: str) -> None:
        status = "PASS" if passed else "FAIL"
        line = f"criterion {number} {name}: {status} ({detail})"
        request.config._criterion_lines[number] = line
        assert passed, line

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_criterion_lines", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(lines):
        terminalreporter.write_line(lines[number])
