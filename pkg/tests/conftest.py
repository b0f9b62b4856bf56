from __future__ import annotations

_acceptance: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        number, title = _criterion_of(report.nodeid)
        if number is not None:
            _acceptance[number] = (title, "PASS" if report.passed else "FAIL")


def _criterion_of(nodeid: str):
    from test_acceptance import CRITERIA

    tag = nodeid.rsplit("[", 1)[-1].rstrip("]")
    for number, title, _ in CRITERIA:
        if tag == f"criterion_{number:02d}":
            return number, title
    return None, None


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, verdict = _acceptance[number]
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  {title}")
