import pytest

_details: dict[str, str] = {}
_outcomes: dict[str, str] = {}


@pytest.fixture
def detail(request):
    """Attach a one-line summary to the current acceptance test."""
    def _set(text: str) -> None:
        _details[request.node.nodeid] = text
    return _set


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion" not in report.nodeid:
        return
    if report.when == "call" or report.outcome == "failed":
        if _outcomes.get(report.nodeid) != "FAIL":
            _outcomes[report.nodeid] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in _outcomes.items():
        name = nodeid.split("::", 1)[1].removeprefix("test_criterion_")
        line = f"{outcome}  {name}"
        if nodeid in _details:
            line += f"  -- {_details[nodeid]}"
        terminalreporter.write_line(line)
