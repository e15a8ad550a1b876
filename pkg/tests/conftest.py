"""Shared test plumbing: the acceptance-criteria report.

Each acceptance test wraps its body in :func:`criterion`, which records
one PASS/FAIL line; the terminal-summary hook prints them all at the end
of the run so the verdicts are visible even when every test passes.
"""

from __future__ import annotations

import contextlib

ACCEPTANCE: list[tuple[int, str]] = []


def _record(number: int, ok: bool, text: str) -> None:
    verdict = "PASS" if ok else "FAIL"
    ACCEPTANCE[:] = [(k, line) for k, line in ACCEPTANCE if k != number]
    ACCEPTANCE.append((number, f"criterion {number}: {verdict} - {text}"))


@contextlib.contextmanager
def criterion(number: int, text: str):
    """Record the criterion as PASS on clean exit, FAIL on any exception."""
    try:
        yield
    except BaseException:
        _record(number, False, text)
        raise
    _record(number, True, text)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
