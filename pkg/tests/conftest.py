from fractions import Fraction

import pytest

_ACCEPTANCE: dict[int, dict] = {}


def pytest_runtest_logreport(report):
    number = getattr(report, "acceptance_number", None)
    if number is None:
        return
    entry = _ACCEPTANCE.setdefault(number, {"title": report.acceptance_title, "ok": True})
    if report.failed:
        entry["ok"] = False


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        report.acceptance_number, report.acceptance_title = marker.args


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        entry = _ACCEPTANCE[number]
        verdict = "PASS" if entry["ok"] else "FAIL"
        terminalreporter.write_line(f"AC{number:<2} {verdict}  {entry['title']}")


# Independent oracles: plain forward/backward iteration of the recurrences.


def recurrence_terms(g0, g1, lo, hi):
    """{i: G_i} for lo <= i <= hi by stepping G_{i+1} = G_i + G_{i-1} both ways."""
    vals = {0: g0, 1: g1}
    for i in range(2, hi + 1):
        vals[i] = vals[i - 1] + vals[i - 2]
    for i in range(-1, lo - 1, -1):
        vals[i] = vals[i + 2] - vals[i + 1]
    return vals


def horadam_terms(a, b, P, Q, lo, hi):
    vals = {0: Fraction(a), 1: Fraction(b)}
    for i in range(2, hi + 1):
        vals[i] = P * vals[i - 1] - Q * vals[i - 2]
    for i in range(-1, lo - 1, -1):
        vals[i] = (P * vals[i + 1] - vals[i + 2]) / Q
    return vals


@pytest.fixture
def fib_oracle():
    table = recurrence_terms(0, 1, -120, 520)
    return table.__getitem__
