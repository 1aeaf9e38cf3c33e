import pytest

_ACCEPTANCE: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion: ``criterion(number, title)`` before asserting."""
    record = {}

    def register(number, title):
        record["key"] = (number, title)

    yield register
    if "key" in record:
        number, title = record["key"]
        failed = getattr(request.node, "rep_call", None)
        ok = failed is not None and failed.passed
        _ACCEPTANCE[number] = (title, ok)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, ok = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}")
