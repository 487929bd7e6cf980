"""Shared pytest configuration: collects one summary line per acceptance criterion."""

from __future__ import annotations

ACCEPTANCE: list[str] = []


def record(number: int, label: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    line = f"criterion {number:2d} {status}: {label}"
    ACCEPTANCE.append(line + (f" ({detail})" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE):
        terminalreporter.write_line(line)
