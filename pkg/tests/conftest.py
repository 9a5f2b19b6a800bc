import pytest

CRITERIA = {}


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion."""
    def record(number, text):
        # a criterion split over several tests passes only if all of them do
        CRITERIA.setdefault(number, [text, "PASS"])
        request.node._criterion = number
    yield record
    num = getattr(request.node, "_criterion", None)
    rep = getattr(request.node, "rep_call", None)
    if num is not None and (rep is None or not rep.passed):
        CRITERIA[num][1] = "FAIL"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        text, status = CRITERIA[num]
        terminalreporter.write_line(f"criterion {num}: {status}  {text}")
