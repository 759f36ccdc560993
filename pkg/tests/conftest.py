import re

from hypothesis import settings

settings.register_profile("parkhopf", deadline=None)
settings.load_profile("parkhopf")

CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")
_results: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    m = CRITERION.search(report.nodeid)
    if not m:
        return
    number, label = int(m.group(1)), m.group(2).replace("_", " ")
    if report.when == "call" or report.outcome != "passed":
        previous = _results.get(number, (label, "PASS"))[1]
        outcome = "FAIL" if report.outcome == "failed" or previous == "FAIL" else "PASS"
        _results[number] = (label, outcome)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        label, outcome = _results[number]
        terminalreporter.write_line(f"criterion {number:2d} {outcome}: {label}")
